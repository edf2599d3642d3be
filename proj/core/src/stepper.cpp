#include "lowmach/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lowmach {

double StepControls::resolve(const Grid& grid) const {
    validate();
    return dt ? *dt : cfl * std::min(grid.dx, grid.dy);
}

void StepControls::validate() const {
    if (dt && !(*dt > 0.0 && std::isfinite(*dt))) throw std::invalid_argument("dt must be positive and finite");
    if (!dt && !(cfl > 0.0 && std::isfinite(cfl))) throw std::invalid_argument("cfl must be positive and finite");
}

StepFailure::StepFailure(int stage, const std::string& what) : std::runtime_error(what), stage_(stage) {}

void StageWorkspace::reset(const Grid& grid, int stages) {
    const auto n = static_cast<std::size_t>(stages);
    u.assign(n, VectorField(grid));
    theta.assign(n, ScalarField(grid));
    v.assign(n, VectorField(grid));
    q.assign(n, ScalarField(grid));
    explicit_v.assign(n, VectorField(grid));
    div_u.assign(n, ScalarField(grid));
    div0_v.assign(n, ScalarField(grid));
    v_combined.assign(n, VectorField(grid));
}

namespace {

void require_gsa(const IMEXTableau& t) {
    const TableauReport r = classify(t);
    if (r.scheme_type == SchemeType::invalid || !r.gsa) {
        throw std::invalid_argument("tableau rejected: the stepper needs a valid GSA tableau\n" + describe(t, r));
    }
}

std::size_t z(int i) { return static_cast<std::size_t>(i); }

}  // namespace

Stepper::Stepper(const Grid& grid, IMEXTableau tableau, PhysicsParams params, SpatialOrder order, LFParams lf)
    : grid_(grid),
      tableau_(std::move(tableau)),
      params_(params),
      order_(order),
      lf_(lf),
      helmholtz_(grid, order.central) {
    require_gsa(tableau_);
    params_.validate();
    lf_.validate();
}

void Stepper::check(int i, bool finite, const char* field) const {
    if (!finite) {
        throw StepFailure(i + 1, std::string("non-finite ") + field + " in stage " + std::to_string(i + 1) +
                                     " at t = " + std::to_string(state_n_ ? state_n_->time : 0.0));
    }
}

void Stepper::begin_step(const MomentState& state_n, double dt) {
    require_same_grid(grid_, state_n.grid(), "Stepper::begin_step");
    if (!(dt > 0.0 && std::isfinite(dt))) throw std::invalid_argument("dt must be positive and finite");
    state_n_ = &state_n;
    dt_ = dt;
    ws_.reset(grid_, tableau_.s);
    div_u_n_ = central_div(state_n.u, order_);
}

void Stepper::stage_v(int i) {
    const MomentState& n = *state_n_;
    VectorField& vi = ws_.v[z(i)];
    if (copies_time_n(i)) {
        vi = n.v;
    } else {
        VectorField acc(grid_);
        for (int j = 0; j < i; ++j) {
            if (at(i, j) != 0.0) acc.axpy(at(i, j), ws_.explicit_v[z(j)]);
            if (a(i, j) != 0.0) acc.axpy(a(i, j), ws_.v[z(j)]);
        }
        const double aii = a(i, i);
        if (relax() == 0.0) {
            vi = (-1.0 / aii) * acc;
        } else {
            const double denom = relax() + dt_ * aii;
            vi = (relax() / denom) * n.v;
            vi.axpy(-dt_ / denom, acc);
        }
    }
    check(i, vi.all_finite(), "v");
    VectorField& vc = ws_.v_combined[z(i)];
    vc = VectorField(grid_);
    for (int j = 0; j <= i; ++j) {
        if (a(i, j) != 0.0) vc.axpy(a(i, j), ws_.v[z(j)]);
    }
}

void Stepper::stage_theta(int i) {
    const MomentState& n = *state_n_;
    ScalarField& ti = ws_.theta[z(i)];
    if (copies_time_n(i)) {
        ti = n.theta;
    } else {
        const double aii = a(i, i);
        ScalarField rhs(grid_);
        ScalarField theta_prev(grid_);
        for (int j = 0; j < i; ++j) {
            if (a(i, j) == 0.0) continue;
            rhs.axpy(a(i, j) / (dt_ * aii * aii), ws_.div_u[z(j)]);
            theta_prev.axpy(a(i, j), ws_.theta[z(j)]);
        }
        rhs.axpy(1.0 / (dt_ * aii), div_u_n_);
        rhs.axpy(-1.0 / aii, double_div_B(ws_.v_combined[z(i)], order_));
        rhs.axpy(-1.0 / aii, laplacian(theta_prev, order_));

        const double eps = params_.epsilon;
        const double lambda = eps == 0.0 ? 0.0 : 2.0 * eps * eps / (dt_ * dt_ * aii * aii);
        if (lambda > 0.0) {
            // The derivative terms have zero mean exactly; dropping their round-off
            // mean keeps the constant mode of theta at the mean of theta^n.
            const double m = rhs.mean();
            for (auto& x : rhs.values()) x -= m;
            rhs.axpy(-lambda, n.theta);
        }
        ti = helmholtz_.solve(rhs, lambda).theta;
        if (lambda == 0.0) {
            // Same constant mode as the lambda > 0 branch, where mean(theta) = mean(theta^n).
            const double m = n.theta.mean();
            for (auto& x : ti.values()) x += m;
        }
    }
    check(i, ti.all_finite(), "theta");
}

void Stepper::stage_u(int i) {
    const MomentState& n = *state_n_;
    VectorField& ui = ws_.u[z(i)];
    if (copies_time_n(i)) {
        ui = n.u;
    } else {
        // Dissipation partner with the explicit RK structure of the convective term.
        VectorField partner = (tableau_.c[z(i)] - tableau_.ctil[z(i)]) * n.u;
        ScalarField theta_sum(grid_);
        for (int j = 0; j < i; ++j) {
            if (at(i, j) != 0.0) partner.axpy(at(i, j), ws_.u[z(j)]);
        }
        for (int j = 0; j <= i; ++j) {
            if (a(i, j) != 0.0) theta_sum.axpy(a(i, j), ws_.theta[z(j)]);
        }
        VectorField rate = lf_div_B(ws_.v_combined[z(i)], partner, lf_, order_);
        rate += central_grad(theta_sum, order_);
        ui = n.u;
        ui.axpy(-dt_, rate);
    }
    check(i, ui.all_finite(), "u");
    ws_.div_u[z(i)] = central_div(ui, order_);
}

void Stepper::stage_q(int i) {
    const MomentState& n = *state_n_;
    ScalarField& qi = ws_.q[z(i)];
    ws_.div0_v[z(i)] = lf0_div(ws_.v[z(i)], n.q, lf_, order_);
    if (copies_time_n(i)) {
        qi = n.q;
    } else {
        ScalarField acc(grid_);
        for (int j = 0; j <= i; ++j) {
            if (a(i, j) != 0.0) acc.axpy(a(i, j) * 0.5 * params_.tau, ws_.div0_v[z(j)]);
            if (j < i && a(i, j) != 0.0) acc.axpy(a(i, j), ws_.q[z(j)]);
        }
        const double aii = a(i, i);
        if (relax() == 0.0) {
            qi = (-1.0 / aii) * acc;
        } else {
            const double denom = relax() + dt_ * aii;
            qi = (relax() / denom) * n.q;
            qi.axpy(-dt_ / denom, acc);
        }
    }
    check(i, qi.all_finite(), "q");
    if (i + 1 < tableau_.s) cache_explicit(i);
}

void Stepper::cache_explicit(int i) {
    const VectorField& ui = ws_.u[z(i)];
    const VectorField& vi = ws_.v[z(i)];
    VectorField e = (0.25 * params_.tau) * lf0_div_B(ui, vi, lf_, order_);
    if (relax() != 0.0) e.axpy(relax(), lf_grad_scalar(ws_.q[z(i)], vi, lf_, order_));
    e -= apply_F(ui);
    ws_.explicit_v[z(i)] = std::move(e);
}

MomentState Stepper::advance(const MomentState& state, double dt) {
    begin_step(state, dt);
    for (int i = 0; i < tableau_.s; ++i) {
        stage_v(i);
        stage_theta(i);
        stage_u(i);
        stage_q(i);
    }
    const auto last = z(tableau_.s - 1);
    MomentState out;
    out.u = ws_.u[last];
    out.theta = ws_.theta[last];
    out.v = ws_.v[last];
    out.q = ws_.q[last];
    out.time = state.time + dt;
    state_n_ = nullptr;
    return out;
}

MomentState advance(const MomentState& state, const IMEXTableau& tableau, const PhysicsParams& params,
                    const StepControls& controls, SpatialOrder order, LFParams lf) {
    Stepper stepper(state.grid(), tableau, params, order, lf);
    return stepper.advance(state, controls.resolve(state.grid()));
}

}  // namespace lowmach
