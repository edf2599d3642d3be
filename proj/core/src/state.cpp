#include "lowmach/state.hpp"

#include <cmath>
#include <stdexcept>

namespace lowmach {

void PhysicsParams::validate() const {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be finite and >= 0");
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw std::invalid_argument("tau must be finite and >= 0");
}

bool MomentState::all_finite() const { return u.all_finite() && theta.all_finite() && v.all_finite() && q.all_finite(); }

ScalarField half_speed_squared(const VectorField& u) {
    ScalarField out(u.grid());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = 0.5 * (u.c1[k] * u.c1[k] + u.c2[k] * u.c2[k]);
    return out;
}

MomentState initialize_state(const Grid& grid, const VectorField& u0, const PhysicsParams& params, InitMode mode,
                             SpatialOrder order) {
    require_same_grid(grid, u0.grid(), "initialize_state");
    params.validate();
    MomentState s;
    s.u = u0;
    s.theta = ScalarField(grid);
    s.v = VectorField(grid);
    s.q = ScalarField(grid);
    if (mode == InitMode::naive) return s;

    const VectorField g1 = central_grad(u0.c1, order);
    const VectorField g2 = central_grad(u0.c2, order);
    const VectorField f = apply_F(u0);
    const double k = 0.25 * params.tau;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        s.v.c1[i] = f.c1[i] - k * (-g1.c1[i] + g2.c2[i]);
        s.v.c2[i] = f.c2[i] - k * (g2.c1[i] + g1.c2[i]);
    }
    s.theta = half_speed_squared(u0);
    return s;
}

ScalarField pressure(const MomentState& state) { return state.theta - half_speed_squared(state.u); }

}  // namespace lowmach
