#include "lowmach/diagnostics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lowmach {

ScalarField vorticity(const VectorField& u, SpatialOrder order) {
    const VectorField g1 = central_grad(u.c1, order);
    const VectorField g2 = central_grad(u.c2, order);
    return g2.c1 - g1.c2;
}

double divergence_linf(const VectorField& u, SpatialOrder order) { return central_div(u, order).max_abs(); }

ScalarField restrict_injection(const ScalarField& fine, const Grid& coarse) {
    const Grid& g = fine.grid();
    const bool same_domain = std::abs(g.lx - coarse.lx) <= 1e-12 * g.lx && std::abs(g.ly - coarse.ly) <= 1e-12 * g.ly;
    if (!same_domain || g.nx % coarse.nx != 0 || g.ny % coarse.ny != 0) {
        throw std::invalid_argument("grids do not nest: " + std::to_string(g.nx) + "x" + std::to_string(g.ny) +
                                    " onto " + std::to_string(coarse.nx) + "x" + std::to_string(coarse.ny));
    }
    const int rx = g.nx / coarse.nx;
    const int ry = g.ny / coarse.ny;
    ScalarField out(coarse);
    for (int j = 0; j < coarse.ny; ++j) {
        for (int i = 0; i < coarse.nx; ++i) out(i, j) = fine(i * rx, j * ry);
    }
    return out;
}

ErrorTriple error_norms(const ScalarField& f, const ScalarField& ref) {
    const Grid& g = f.grid();
    const ScalarField r = restrict_injection(ref, g);
    const double area = g.dx * g.dy;
    ErrorTriple e;
    double sq = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double d = std::abs(f[k] - r[k]);
        e.l1 += d;
        sq += d * d;
        e.linf = std::max(e.linf, d);
    }
    e.l1 *= area;
    e.l2 = std::sqrt(sq * area);
    return e;
}

double observed_order(double e_coarse, double e_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0)) throw std::invalid_argument("observed_order needs positive errors");
    return std::log2(e_coarse / e_fine);
}

double kinetic_energy(const VectorField& u) {
    const Grid& g = u.grid();
    double s = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) s += u.c1[k] * u.c1[k] + u.c2[k] * u.c2[k];
    return 0.5 * s * g.dx * g.dy;
}

Vec2 mean_momentum(const VectorField& u) { return {u.c1.mean(), u.c2.mean()}; }

}  // namespace lowmach
