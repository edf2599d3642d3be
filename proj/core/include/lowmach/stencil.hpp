#pragma once

#include <array>

#include "lowmach/grid.hpp"

namespace lowmach {

enum class UpwindOrder { first = 1, weno3 = 3 };
enum class CentralOrder { second = 2, fourth = 4 };

/// Accuracy selection for the flux-difference (upwind) and central operators.
/// (first, second) is the baseline scheme, (weno3, fourth) the high-order one.
struct SpatialOrder {
    UpwindOrder upwind = UpwindOrder::first;
    CentralOrder central = CentralOrder::second;

    /// Throws std::invalid_argument for anything but 1/3 and 2/4.
    static SpatialOrder from_ints(int upwind_order, int central_order);
    static SpatialOrder baseline() { return {}; }
    static SpatialOrder high_order() { return {UpwindOrder::weno3, CentralOrder::fourth}; }

    bool operator==(const SpatialOrder&) const = default;
};

/// Lax-Friedrichs dissipation coefficients. alpha penalizes jumps of the
/// partner field in D_LF; alpha0 does the same for D0_LF (zero: no diffusion).
struct LFParams {
    double alpha = 1.0;
    double alpha0 = 0.0;

    void validate() const;
};

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

/// B(w) = [[-w1, w2], [w2, w1]]
Mat2 apply_B(const Vec2& w);
/// F(u) = ((u2^2 - u1^2)/2, u1 u2), the local equilibrium of v.
Vec2 apply_F(const Vec2& u);
VectorField apply_F(const VectorField& u);

enum class Interface { left, right };

/// Third-order WENO value at the left or right interface of the middle cell of
/// `stencil` = (f[i-1], f[i], f[i+1]).
double weno3_interface(const std::array<double, 3>& stencil, Interface side);

/// Nonlinear weights (omega0, omega1) used by weno3_interface. omega0 belongs to
/// the upwind two-point substencil (linear weight 1/3).
std::array<double, 2> weno3_weights(const std::array<double, 3>& stencil, Interface side);

inline constexpr double kWenoEpsilon = 1e-6;

/// D_LF f: flux-difference gradient of a scalar. The x-flux penalizes jumps of
/// partner.c1, the y-flux jumps of partner.c2.
VectorField lf_grad_scalar(const ScalarField& f, const VectorField& partner, const LFParams& params,
                           SpatialOrder order);

/// D_LF . B(v): row r of B(v) is differenced as an (x-flux, y-flux) pair with
/// dissipation on the jumps of partner_u component r.
VectorField lf_div_B(const VectorField& v, const VectorField& partner_u, const LFParams& params,
                     SpatialOrder order);

/// D0_LF . v with dissipation alpha0 on the jumps of the scalar partner.
ScalarField lf0_div(const VectorField& v, const ScalarField& partner, const LFParams& params, SpatialOrder order);
/// Partner-free overload (alpha0 = 0).
ScalarField lf0_div(const VectorField& v, SpatialOrder order);

/// D0_LF . B(u) with dissipation alpha0 on the jumps of partner component r.
VectorField lf0_div_B(const VectorField& u, const VectorField& partner, const LFParams& params, SpatialOrder order);
VectorField lf0_div_B(const VectorField& u, SpatialOrder order);

VectorField central_grad(const ScalarField& f, SpatialOrder order);
ScalarField central_div(const VectorField& u, SpatialOrder order);
/// D0^2 : B(v) = -Dxx v1 + 2 Dxy v2 + Dyy v1
ScalarField double_div_B(const VectorField& v, SpatialOrder order);
ScalarField laplacian(const ScalarField& f, SpatialOrder order);

/// Eigenvalue of the periodic `laplacian` stencil in one direction for the
/// discrete angle theta = 2 pi k / n and spacing h.
double laplacian_symbol_1d(double theta, double h, CentralOrder order);

}  // namespace lowmach
