#pragma once

#include "lowmach/grid.hpp"
#include "lowmach/state.hpp"
#include "lowmach/stencil.hpp"

namespace lowmach {

/// dx u2 - dy u1 with the central stencils of the configured order.
ScalarField vorticity(const VectorField& u, SpatialOrder order);

/// max |D0 . u|
double divergence_linf(const VectorField& u, SpatialOrder order);

/// Cell-area weighted norms: l1 = sum |e| dx dy, l2 = sqrt(sum e^2 dx dy), linf = max |e|.
struct ErrorTriple {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
};

/// Restricts `ref` to f's grid by pointwise injection and returns the norms of
/// f - ref. Throws std::invalid_argument unless the grids nest.
ErrorTriple error_norms(const ScalarField& f, const ScalarField& ref);

/// Pointwise injection of a field onto a coarser nested grid.
ScalarField restrict_injection(const ScalarField& fine, const Grid& coarse);

/// log2(e_coarse / e_fine); both must be positive.
double observed_order(double e_coarse, double e_fine);

/// (1/2) sum |u|^2 dx dy
double kinetic_energy(const VectorField& u);

/// Grid means of u1 and u2.
Vec2 mean_momentum(const VectorField& u);

}  // namespace lowmach
