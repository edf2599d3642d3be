#pragma once

#include "lowmach/grid.hpp"
#include "lowmach/stencil.hpp"

namespace lowmach {

/// epsilon = 0 selects the exact incompressible limit; tau = 0 the inviscid one
/// (viscosity tau/4, Re = 4/tau).
struct PhysicsParams {
    double epsilon = 1e-6;
    double tau = 0.0;

    void validate() const;
};

/// The six evolved moments. Pressure is derived: p = theta - |u|^2/2.
struct MomentState {
    VectorField u;
    ScalarField theta;
    VectorField v;
    ScalarField q;
    double time = 0.0;

    const Grid& grid() const { return u.grid(); }
    bool all_finite() const;
};

enum class InitMode { well_prepared, naive };

/// naive: theta = v = q = 0. well_prepared: v at its small-epsilon equilibrium
/// F(u) - (tau/4) div B(u), theta = |u|^2/2 (p = 0), q = 0.
MomentState initialize_state(const Grid& grid, const VectorField& u0, const PhysicsParams& params, InitMode mode,
                             SpatialOrder order = SpatialOrder::baseline());

ScalarField pressure(const MomentState& state);

/// |u|^2 / 2 pointwise.
ScalarField half_speed_squared(const VectorField& u);

}  // namespace lowmach
