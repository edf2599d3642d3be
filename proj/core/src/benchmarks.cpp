#include "lowmach/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowmach {

namespace {
constexpr double kPi = std::numbers::pi;
}

BenchmarkSpec BenchmarkSpec::preset(std::string_view name) {
    BenchmarkSpec s;
    s.name = std::string(name);
    if (name == "thick_shear" || name == "thin_shear") {
        s.lx = s.ly = 2.0 * kPi;
        s.rho_s = name == "thick_shear" ? kPi / 15.0 : kPi / 50.0;
        s.delta = 0.05;
        s.end_time = 6.0;
    } else if (name == "kelvin_helmholtz") {
        s.lx = s.ly = 4.0 * kPi;
        s.delta = 0.03;
        s.end_time = 45.0;
    } else {
        throw std::invalid_argument("unknown benchmark '" + std::string(name) +
                                    "' (known: thick_shear, thin_shear, kelvin_helmholtz)");
    }
    return s;
}

void BenchmarkSpec::validate() const {
    if (name != "thick_shear" && name != "thin_shear" && name != "kelvin_helmholtz") {
        throw std::invalid_argument("unknown benchmark '" + name + "'");
    }
    if (!(lx > 0.0) || !(ly > 0.0)) throw std::invalid_argument("benchmark domain must be positive");
    if (name != "kelvin_helmholtz" && !(rho_s > 0.0)) throw std::invalid_argument("rho_s must be positive");
    if (!(end_time >= 0.0)) throw std::invalid_argument("end_time must be >= 0");
}

Grid benchmark_grid(const BenchmarkSpec& spec, int n) { return make_grid(n, n, spec.lx, spec.ly); }

VectorField initial_velocity(const BenchmarkSpec& spec, const Grid& grid) {
    spec.validate();
    if (std::abs(grid.lx - spec.lx) > 1e-12 * spec.lx || std::abs(grid.ly - spec.ly) > 1e-12 * spec.ly) {
        throw std::invalid_argument("grid domain does not match benchmark '" + spec.name + "'");
    }
    VectorField u(grid);
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i);
            if (spec.name == "kelvin_helmholtz") {
                u.c1(i, j) = std::cos(y);
                u.c2(i, j) = spec.delta * std::sin(0.5 * x);
            } else {
                u.c1(i, j) = y <= kPi ? std::tanh((y - 0.5 * kPi) / spec.rho_s) : std::tanh((1.5 * kPi - y) / spec.rho_s);
                u.c2(i, j) = spec.delta * std::sin(x);
            }
        }
    }
    return u;
}

TimeseriesRecord make_record(const MomentState& state, SpatialOrder order) {
    const Vec2 m = mean_momentum(state.u);
    return {state.time, divergence_linf(state.u, order), kinetic_energy(state.u), m[0], m[1]};
}

std::pair<int, double> plan_steps(const StepControls& controls, const Grid& grid, double t_end) {
    const double dt0 = controls.resolve(grid);
    if (t_end <= 0.0) return {0, dt0};
    const int n = std::max(1, static_cast<int>(std::ceil(t_end / dt0 - 1e-9)));
    return {n, t_end / n};
}

namespace {

MomentState initial_state(const BenchmarkSpec& spec, const SolverSetup& setup, const Grid& grid) {
    return initialize_state(grid, initial_velocity(spec, grid), setup.params, setup.init, setup.order);
}

}  // namespace

RunSummary run_benchmark(const BenchmarkSpec& spec, const SolverSetup& setup, int n, const RunObserver& observer,
                         int snapshots) {
    const Grid grid = benchmark_grid(spec, n);
    Stepper stepper(grid, setup.tableau, setup.params, setup.order, setup.lf);
    const auto [steps, dt] = plan_steps(setup.controls, grid, spec.end_time);

    RunSummary summary;
    summary.steps = steps;
    summary.dt = dt;
    MomentState state = initial_state(spec, setup, grid);

    // Step indices at which snapshots are taken (uniform in time, deduplicated).
    std::vector<int> snap_steps;
    const int count = std::max(snapshots, 0);
    for (int k = 0; k < count; ++k) {
        const int idx = count == 1 ? steps : static_cast<int>(std::lround(static_cast<double>(k) * steps / (count - 1)));
        if (snap_steps.empty() || snap_steps.back() != idx) snap_steps.push_back(idx);
    }
    std::size_t next_snap = 0;
    int snap_index = 0;

    auto emit = [&](int step) {
        const TimeseriesRecord rec = make_record(state, setup.order);
        summary.timeseries.push_back(rec);
        if (observer.on_record) observer.on_record(rec);
        if (next_snap < snap_steps.size() && snap_steps[next_snap] == step) {
            if (observer.on_snapshot) observer.on_snapshot(state, vorticity(state.u, setup.order), snap_index);
            ++snap_index;
            ++next_snap;
        }
    };

    summary.peak_vorticity_initial = vorticity(state.u, setup.order).max_abs();
    emit(0);
    for (int step = 1; step <= steps; ++step) {
        const Vec2 before = mean_momentum(state.u);
        state = stepper.advance(state, dt);
        if (step == steps) state.time = spec.end_time;
        const Vec2 after = mean_momentum(state.u);
        const double scale = std::max(state.u.max_abs(), 1e-300);
        summary.max_momentum_drift = std::max(
            summary.max_momentum_drift, std::max(std::abs(after[0] - before[0]), std::abs(after[1] - before[1])) / scale);
        emit(step);
    }
    summary.peak_vorticity_final = vorticity(state.u, setup.order).max_abs();
    summary.final_state = std::move(state);
    return summary;
}

MomentState simulate(const BenchmarkSpec& spec, const SolverSetup& setup, int n, double t_end, bool use_limit) {
    const Grid grid = benchmark_grid(spec, n);
    const auto [steps, dt] = plan_steps(setup.controls, grid, t_end);
    MomentState state = initial_state(spec, setup, grid);
    if (use_limit) {
        LimitStepper stepper(grid, setup.tableau, setup.params.tau, setup.order, setup.lf);
        for (int k = 0; k < steps; ++k) state = stepper.advance(state, dt);
    } else {
        Stepper stepper(grid, setup.tableau, setup.params, setup.order, setup.lf);
        for (int k = 0; k < steps; ++k) state = stepper.advance(state, dt);
    }
    state.time = t_end;
    return state;
}

StudyResult convergence_against(const BenchmarkSpec& spec, const SolverSetup& setup, const std::vector<int>& resolutions,
                                const ScalarField& reference_vorticity, double target_time) {
    StudyResult result;
    result.reference_points = reference_vorticity.grid().nx + 1;
    for (int n : resolutions) {
        const MomentState s = simulate(spec, setup, n, target_time);
        ConvergenceRow row;
        row.n_points = n + 1;
        row.errors = error_norms(vorticity(s.u, setup.order), reference_vorticity);
        if (!result.rows.empty()) {
            const ErrorTriple& prev = result.rows.back().errors;
            row.orders = ErrorTriple{observed_order(prev.l1, row.errors.l1), observed_order(prev.l2, row.errors.l2),
                                     observed_order(prev.linf, row.errors.linf)};
        }
        result.rows.push_back(row);
    }
    return result;
}

StudyResult run_convergence_study(const BenchmarkSpec& spec, const SolverSetup& setup,
                                  const std::vector<int>& resolutions, int ref_resolution, double target_time,
                                  ReferenceKind reference) {
    for (int n : resolutions) {
        if (n <= 0 || ref_resolution % n != 0 || n >= ref_resolution) {
            throw std::invalid_argument("resolution " + std::to_string(n) + " does not nest under reference " +
                                        std::to_string(ref_resolution));
        }
    }
    const MomentState ref = simulate(spec, setup, ref_resolution, target_time, reference == ReferenceKind::limit);
    return convergence_against(spec, setup, resolutions, vorticity(ref.u, setup.order), target_time);
}

}  // namespace lowmach
