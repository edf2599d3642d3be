#include <cmath>
#include <string>

#include "lowmach/stepper.hpp"

namespace lowmach {

LimitStepper::LimitStepper(const Grid& grid, IMEXTableau tableau, double tau, SpatialOrder order, LFParams lf)
    : grid_(grid), tableau_(std::move(tableau)), tau_(tau), order_(order), lf_(lf), poisson_(grid, order.central) {
    const TableauReport r = classify(tableau_);
    if (r.scheme_type == SchemeType::invalid || !r.gsa) {
        throw std::invalid_argument("tableau rejected: the limit scheme needs a valid GSA tableau\n" + describe(tableau_, r));
    }
    if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
    lf_.validate();
}

MomentState LimitStepper::advance(const MomentState& n, double dt) {
    require_same_grid(grid_, n.grid(), "LimitStepper::advance");
    const int s = tableau_.s;
    const auto& A = tableau_.a;
    const auto& At = tableau_.atil;
    auto idx = [](int i) { return static_cast<std::size_t>(i); };

    std::vector<VectorField> u(idx(s)), v(idx(s)), g(idx(s));
    std::vector<ScalarField> theta(idx(s)), q(idx(s)), div_u(idx(s)), div_v(idx(s));
    const ScalarField div_un = central_div(n.u, order_);

    for (int i = 0; i < s; ++i) {
        const double aii = A[idx(i)][idx(i)];
        if (i == 0 && aii == 0.0) {
            u[0] = n.u;
            theta[0] = n.theta;
            v[0] = n.v;
            q[0] = n.q;
        } else {
            // Convective minus viscous flux of the explicit stages:
            // N_i = sum_k atil_ik [F(u_k) - (tau/4) div B(u_k)]
            VectorField N(grid_);
            VectorField partner = (tableau_.c[idx(i)] - tableau_.ctil[idx(i)]) * n.u;
            for (int k = 0; k < i; ++k) {
                const double w = At[idx(i)][idx(k)];
                if (w == 0.0) continue;
                N.axpy(w, g[idx(k)]);
                partner.axpy(w, u[idx(k)]);
            }

            // Pressure equation: a_ii Lap theta_i = (1/dt) D0.u^n + (1/(dt a_ii)) sum a_ij D0.u_j
            //                                       - D0^2:B(N_i) - sum_{j<i} a_ij Lap theta_j
            ScalarField rhs = (1.0 / dt) * div_un;
            ScalarField theta_prev(grid_);
            for (int j = 0; j < i; ++j) {
                const double w = A[idx(i)][idx(j)];
                if (w == 0.0) continue;
                rhs.axpy(w / (dt * aii), div_u[idx(j)]);
                theta_prev.axpy(w, theta[idx(j)]);
            }
            rhs -= double_div_B(N, order_);
            rhs -= laplacian(theta_prev, order_);
            rhs *= 1.0 / aii;
            theta[idx(i)] = poisson_.solve(rhs, 0.0).theta;

            ScalarField theta_sum = theta_prev;
            theta_sum.axpy(aii, theta[idx(i)]);
            VectorField rate = lf_div_B(N, partner, lf_, order_);
            rate += central_grad(theta_sum, order_);
            u[idx(i)] = n.u;
            u[idx(i)].axpy(-dt, rate);

            VectorField vi = N;
            for (int k = 0; k < i; ++k) vi.axpy(-A[idx(i)][idx(k)], v[idx(k)]);
            vi *= 1.0 / aii;
            v[idx(i)] = std::move(vi);
        }
        div_u[idx(i)] = central_div(u[idx(i)], order_);
        div_v[idx(i)] = lf0_div(v[idx(i)], n.q, lf_, order_);
        if (!(i == 0 && aii == 0.0)) {
            ScalarField acc(grid_);
            for (int j = 0; j <= i; ++j) {
                const double w = A[idx(i)][idx(j)];
                if (w == 0.0) continue;
                acc.axpy(w * 0.5 * tau_, div_v[idx(j)]);
                if (j < i) acc.axpy(w, q[idx(j)]);
            }
            q[idx(i)] = (-1.0 / aii) * acc;
        }
        if (!u[idx(i)].all_finite() || !theta[idx(i)].all_finite() || !v[idx(i)].all_finite() ||
            !q[idx(i)].all_finite()) {
            throw StepFailure(i + 1, "non-finite values in limit stage " + std::to_string(i + 1));
        }
        g[idx(i)] = apply_F(u[idx(i)]);
        g[idx(i)].axpy(-0.25 * tau_, lf0_div_B(u[idx(i)], v[idx(i)], lf_, order_));
    }

    MomentState out;
    out.u = u[idx(s - 1)];
    out.v = v[idx(s - 1)];
    out.q = q[idx(s - 1)];
    out.theta = theta[idx(s - 1)];
    out.time = n.time + dt;
    const double p_mean = (out.theta - half_speed_squared(out.u)).mean();
    for (auto& x : out.theta.values()) x -= p_mean;
    return out;
}

MomentState advance_limit(const MomentState& state, const IMEXTableau& tableau, double tau,
                          const StepControls& controls, SpatialOrder order, LFParams lf) {
    LimitStepper stepper(state.grid(), tableau, tau, order, lf);
    return stepper.advance(state, controls.resolve(state.grid()));
}

}  // namespace lowmach
