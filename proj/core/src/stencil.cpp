#include "lowmach/stencil.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowmach {

SpatialOrder SpatialOrder::from_ints(int upwind_order, int central_order) {
    SpatialOrder order;
    switch (upwind_order) {
        case 1: order.upwind = UpwindOrder::first; break;
        case 3: order.upwind = UpwindOrder::weno3; break;
        default: throw std::invalid_argument("upwind order must be 1 or 3, got " + std::to_string(upwind_order));
    }
    switch (central_order) {
        case 2: order.central = CentralOrder::second; break;
        case 4: order.central = CentralOrder::fourth; break;
        default: throw std::invalid_argument("central order must be 2 or 4, got " + std::to_string(central_order));
    }
    return order;
}

void LFParams::validate() const {
    if (!(alpha >= 0.0) || !(alpha0 >= 0.0)) {
        throw std::invalid_argument("LF dissipation coefficients must be non-negative");
    }
}

Mat2 apply_B(const Vec2& w) { return Mat2{{{-w[0], w[1]}, {w[1], w[0]}}}; }

Vec2 apply_F(const Vec2& u) { return Vec2{0.5 * (u[1] * u[1] - u[0] * u[0]), u[0] * u[1]}; }

VectorField apply_F(const VectorField& u) {
    VectorField out(u.grid());
    for (std::size_t k = 0; k < u.c1.size(); ++k) {
        const Vec2 f = apply_F(Vec2{u.c1[k], u.c2[k]});
        out.c1[k] = f[0];
        out.c2[k] = f[1];
    }
    return out;
}

namespace {

enum class Axis { x, y };

constexpr int kGhost = 2;

// Periodic line gather: buf[g + k] = f[line element k] for k in [-g, n + g).
struct LineView {
    std::size_t offset;
    std::size_t stride;
    int n;
};

template <typename Fn>
void for_each_line(const Grid& g, Axis axis, Fn&& fn) {
    if (axis == Axis::x) {
        for (int j = 0; j < g.ny; ++j) fn(LineView{static_cast<std::size_t>(j) * g.nx, 1, g.nx});
    } else {
        for (int i = 0; i < g.nx; ++i) fn(LineView{static_cast<std::size_t>(i), static_cast<std::size_t>(g.nx), g.ny});
    }
}

void gather(std::span<const double> f, const LineView& line, std::vector<double>& buf) {
    const int n = line.n;
    buf.resize(static_cast<std::size_t>(n + 2 * kGhost));
    for (int k = -kGhost; k < n + kGhost; ++k) {
        const int kk = ((k % n) + n) % n;
        buf[static_cast<std::size_t>(k + kGhost)] = f[line.offset + line.stride * static_cast<std::size_t>(kk)];
    }
}

double spacing(const Grid& g, Axis axis) { return axis == Axis::x ? g.dx : g.dy; }

inline double weno_nonlinear(double q0, double beta0, double q1, double beta1) {
    const double a0 = (1.0 / 3.0) / ((kWenoEpsilon + beta0) * (kWenoEpsilon + beta0));
    const double a1 = (2.0 / 3.0) / ((kWenoEpsilon + beta1) * (kWenoEpsilon + beta1));
    return (a0 * q0 + a1 * q1) / (a0 + a1);
}

// Right interface of b from (a, b, c), upwind direction to the left.
inline double weno_right(double a, double b, double c) {
    return weno_nonlinear(-0.5 * a + 1.5 * b, (b - a) * (b - a), 0.5 * (b + c), (c - b) * (c - b));
}

// Left interface of b from (a, b, c), upwind direction to the right.
inline double weno_left(double a, double b, double c) {
    return weno_nonlinear(1.5 * b - 0.5 * c, (c - b) * (c - b), 0.5 * (a + b), (b - a) * (b - a));
}

// out += sign * (F_{k+1/2} - F_{k-1/2}) / h along `axis`, where F is the local
// Lax-Friedrichs flux of f with dissipation alpha on jumps of `partner`
// (nullptr: no partner). WENO3 reconstructs the split fluxes (f +- alpha p)/2.
void add_flux_derivative(ScalarField& out, const ScalarField& f, const ScalarField* partner, double alpha,
                         UpwindOrder order, Axis axis, double sign) {
    const Grid& g = f.grid();
    const double inv_h = sign / spacing(g, axis);
    std::vector<double> bf, bp, flux;
    const bool has_partner = partner != nullptr && alpha != 0.0;
    for_each_line(g, axis, [&](const LineView& line) {
        gather(f.values(), line, bf);
        if (has_partner) {
            gather(partner->values(), line, bp);
        } else {
            bp.assign(bf.size(), 0.0);
        }
        const int n = line.n;
        // flux[k + 1] holds F_{k+1/2} for k = -1 .. n-1
        flux.resize(static_cast<std::size_t>(n + 1));
        for (int k = -1; k < n; ++k) {
            const std::size_t c = static_cast<std::size_t>(k + kGhost);
            double value;
            if (order == UpwindOrder::first) {
                value = 0.5 * (bf[c] + bf[c + 1] - alpha * (bp[c + 1] - bp[c]));
            } else {
                auto plus = [&](std::size_t m) { return 0.5 * (bf[m] + alpha * bp[m]); };
                auto minus = [&](std::size_t m) { return 0.5 * (bf[m] - alpha * bp[m]); };
                value = weno_right(plus(c - 1), plus(c), plus(c + 1)) + weno_left(minus(c), minus(c + 1), minus(c + 2));
            }
            flux[static_cast<std::size_t>(k + 1)] = value;
        }
        for (int k = 0; k < n; ++k) {
            out[line.offset + line.stride * static_cast<std::size_t>(k)] +=
                inv_h * (flux[static_cast<std::size_t>(k + 1)] - flux[static_cast<std::size_t>(k)]);
        }
    });
}

// out += factor * first derivative along axis with the central stencil.
void add_central_derivative(ScalarField& out, const ScalarField& f, Axis axis, CentralOrder order, double factor) {
    const Grid& g = f.grid();
    const double h = spacing(g, axis);
    std::vector<double> b;
    for_each_line(g, axis, [&](const LineView& line) {
        gather(f.values(), line, b);
        for (int k = 0; k < line.n; ++k) {
            const std::size_t c = static_cast<std::size_t>(k + kGhost);
            double d;
            if (order == CentralOrder::second) {
                d = (b[c + 1] - b[c - 1]) / (2.0 * h);
            } else {
                d = (8.0 * (b[c + 1] - b[c - 1]) - (b[c + 2] - b[c - 2])) / (12.0 * h);
            }
            out[line.offset + line.stride * static_cast<std::size_t>(k)] += factor * d;
        }
    });
}

void add_second_derivative(ScalarField& out, const ScalarField& f, Axis axis, CentralOrder order, double factor) {
    const Grid& g = f.grid();
    const double h = spacing(g, axis);
    std::vector<double> b;
    for_each_line(g, axis, [&](const LineView& line) {
        gather(f.values(), line, b);
        for (int k = 0; k < line.n; ++k) {
            const std::size_t c = static_cast<std::size_t>(k + kGhost);
            double d;
            if (order == CentralOrder::second) {
                d = ((b[c + 1] - b[c]) + (b[c - 1] - b[c])) / (h * h);
            } else {
                d = (16.0 * ((b[c + 1] - b[c]) + (b[c - 1] - b[c])) - ((b[c + 2] - b[c]) + (b[c - 2] - b[c]))) /
                    (12.0 * h * h);
            }
            out[line.offset + line.stride * static_cast<std::size_t>(k)] += factor * d;
        }
    });
}

ScalarField negated(const ScalarField& f) {
    ScalarField out = f;
    out *= -1.0;
    return out;
}

// Rows of B(w): row 1 = (-w1, w2), row 2 = (w2, w1). Each row is differenced
// as x-flux / y-flux with dissipation on the matching partner component.
VectorField flux_div_B(const VectorField& w, const VectorField* partner, double alpha, UpwindOrder order) {
    const Grid& g = w.grid();
    VectorField out(g);
    const ScalarField minus_w1 = negated(w.c1);
    const ScalarField* p1 = partner ? &partner->c1 : nullptr;
    const ScalarField* p2 = partner ? &partner->c2 : nullptr;
    add_flux_derivative(out.c1, minus_w1, p1, alpha, order, Axis::x, 1.0);
    add_flux_derivative(out.c1, w.c2, p1, alpha, order, Axis::y, 1.0);
    add_flux_derivative(out.c2, w.c2, p2, alpha, order, Axis::x, 1.0);
    add_flux_derivative(out.c2, w.c1, p2, alpha, order, Axis::y, 1.0);
    return out;
}

}  // namespace

std::array<double, 2> weno3_weights(const std::array<double, 3>& s, Interface side) {
    double beta0, beta1;
    if (side == Interface::right) {
        beta0 = (s[1] - s[0]) * (s[1] - s[0]);
        beta1 = (s[2] - s[1]) * (s[2] - s[1]);
    } else {
        beta0 = (s[2] - s[1]) * (s[2] - s[1]);
        beta1 = (s[1] - s[0]) * (s[1] - s[0]);
    }
    const double a0 = (1.0 / 3.0) / ((kWenoEpsilon + beta0) * (kWenoEpsilon + beta0));
    const double a1 = (2.0 / 3.0) / ((kWenoEpsilon + beta1) * (kWenoEpsilon + beta1));
    return {a0 / (a0 + a1), a1 / (a0 + a1)};
}

double weno3_interface(const std::array<double, 3>& s, Interface side) {
    return side == Interface::right ? weno_right(s[0], s[1], s[2]) : weno_left(s[0], s[1], s[2]);
}

VectorField lf_grad_scalar(const ScalarField& f, const VectorField& partner, const LFParams& params,
                           SpatialOrder order) {
    require_same_grid(f.grid(), partner.grid(), "lf_grad_scalar");
    VectorField out(f.grid());
    add_flux_derivative(out.c1, f, &partner.c1, params.alpha, order.upwind, Axis::x, 1.0);
    add_flux_derivative(out.c2, f, &partner.c2, params.alpha, order.upwind, Axis::y, 1.0);
    return out;
}

VectorField lf_div_B(const VectorField& v, const VectorField& partner_u, const LFParams& params, SpatialOrder order) {
    require_same_grid(v.grid(), partner_u.grid(), "lf_div_B");
    return flux_div_B(v, &partner_u, params.alpha, order.upwind);
}

ScalarField lf0_div(const VectorField& v, const ScalarField& partner, const LFParams& params, SpatialOrder order) {
    require_same_grid(v.grid(), partner.grid(), "lf0_div");
    ScalarField out(v.grid());
    add_flux_derivative(out, v.c1, &partner, params.alpha0, order.upwind, Axis::x, 1.0);
    add_flux_derivative(out, v.c2, &partner, params.alpha0, order.upwind, Axis::y, 1.0);
    return out;
}

ScalarField lf0_div(const VectorField& v, SpatialOrder order) {
    ScalarField out(v.grid());
    add_flux_derivative(out, v.c1, nullptr, 0.0, order.upwind, Axis::x, 1.0);
    add_flux_derivative(out, v.c2, nullptr, 0.0, order.upwind, Axis::y, 1.0);
    return out;
}

VectorField lf0_div_B(const VectorField& u, const VectorField& partner, const LFParams& params, SpatialOrder order) {
    require_same_grid(u.grid(), partner.grid(), "lf0_div_B");
    return flux_div_B(u, &partner, params.alpha0, order.upwind);
}

VectorField lf0_div_B(const VectorField& u, SpatialOrder order) { return flux_div_B(u, nullptr, 0.0, order.upwind); }

VectorField central_grad(const ScalarField& f, SpatialOrder order) {
    VectorField out(f.grid());
    add_central_derivative(out.c1, f, Axis::x, order.central, 1.0);
    add_central_derivative(out.c2, f, Axis::y, order.central, 1.0);
    return out;
}

ScalarField central_div(const VectorField& u, SpatialOrder order) {
    ScalarField out(u.grid());
    add_central_derivative(out, u.c1, Axis::x, order.central, 1.0);
    add_central_derivative(out, u.c2, Axis::y, order.central, 1.0);
    return out;
}

ScalarField double_div_B(const VectorField& v, SpatialOrder order) {
    const Grid& g = v.grid();
    ScalarField out(g);
    add_second_derivative(out, v.c1, Axis::x, order.central, -1.0);
    add_second_derivative(out, v.c1, Axis::y, order.central, 1.0);
    ScalarField dx_v2(g);
    add_central_derivative(dx_v2, v.c2, Axis::x, order.central, 1.0);
    add_central_derivative(out, dx_v2, Axis::y, order.central, 2.0);
    return out;
}

ScalarField laplacian(const ScalarField& f, SpatialOrder order) {
    ScalarField out(f.grid());
    add_second_derivative(out, f, Axis::x, order.central, 1.0);
    add_second_derivative(out, f, Axis::y, order.central, 1.0);
    return out;
}

double laplacian_symbol_1d(double theta, double h, CentralOrder order) {
    if (order == CentralOrder::second) return (2.0 * std::cos(theta) - 2.0) / (h * h);
    return (-2.0 * std::cos(2.0 * theta) + 32.0 * std::cos(theta) - 30.0) / (12.0 * h * h);
}

}  // namespace lowmach
