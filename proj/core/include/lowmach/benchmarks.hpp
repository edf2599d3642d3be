#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lowmach/diagnostics.hpp"
#include "lowmach/imex.hpp"
#include "lowmach/state.hpp"
#include "lowmach/stencil.hpp"
#include "lowmach/stepper.hpp"

namespace lowmach {

struct BenchmarkSpec {
    std::string name = "thick_shear";
    double lx = 0.0;
    double ly = 0.0;
    /// Shear-layer width (shear layers only).
    double rho_s = 0.0;
    /// Amplitude of the transverse perturbation.
    double delta = 0.0;
    double end_time = 0.0;

    /// thick_shear, thin_shear or kelvin_helmholtz with default parameters.
    static BenchmarkSpec preset(std::string_view name);
    void validate() const;
};

VectorField initial_velocity(const BenchmarkSpec& spec, const Grid& grid);

/// Square grid of n distinct points per direction over the benchmark domain.
Grid benchmark_grid(const BenchmarkSpec& spec, int n);

/// Everything the time loop needs besides the benchmark itself.
struct SolverSetup {
    IMEXTableau tableau = builtin_tableau("second_order_gsa");
    PhysicsParams params{};
    SpatialOrder order{};
    LFParams lf{};
    StepControls controls{};
    InitMode init = InitMode::well_prepared;
};

struct TimeseriesRecord {
    double t = 0.0;
    double div_linf = 0.0;
    double kinetic_energy = 0.0;
    double mean_u1 = 0.0;
    double mean_u2 = 0.0;
};

TimeseriesRecord make_record(const MomentState& state, SpatialOrder order);

/// Receives run output as it is produced.
struct RunObserver {
    std::function<void(const MomentState&, const ScalarField& vorticity, int index)> on_snapshot;
    std::function<void(const TimeseriesRecord&)> on_record;
};

struct RunSummary {
    MomentState final_state;
    int steps = 0;
    double dt = 0.0;
    std::vector<TimeseriesRecord> timeseries;
    double peak_vorticity_initial = 0.0;
    double peak_vorticity_final = 0.0;
    /// Largest per-step change of the mean momentum relative to max |u|.
    double max_momentum_drift = 0.0;
};

/// Number of steps and the uniform dt that lands exactly on t_end, with dt no
/// larger than the one requested by the controls.
std::pair<int, double> plan_steps(const StepControls& controls, const Grid& grid, double t_end);

/// Runs from t = 0 to spec.end_time on an n x n grid. `snapshots` uniform
/// snapshots include t = 0 and t = end_time; every step yields a record.
/// Observer callbacks run before any exception is propagated for the step.
RunSummary run_benchmark(const BenchmarkSpec& spec, const SolverSetup& setup, int n, const RunObserver& observer = {},
                         int snapshots = 20);

/// Final state at t_end on an n x n grid, with the relaxation stepper or
/// (use_limit) the projection-form limit scheme.
MomentState simulate(const BenchmarkSpec& spec, const SolverSetup& setup, int n, double t_end, bool use_limit = false);

struct ConvergenceRow {
    /// Resolution label: distinct points + 1, as in the published tables.
    int n_points = 0;
    ErrorTriple errors;
    std::optional<ErrorTriple> orders;
};

enum class ReferenceKind { self, limit };

struct StudyResult {
    std::vector<ConvergenceRow> rows;
    int reference_points = 0;
};

/// Vorticity errors of each resolution (distinct point counts) against a
/// reference run on ref_resolution, computed with the same scheme (self) or
/// with the limit scheme (limit). Orders are filled from the second row on.
StudyResult run_convergence_study(const BenchmarkSpec& spec, const SolverSetup& setup,
                                  const std::vector<int>& resolutions, int ref_resolution, double target_time,
                                  ReferenceKind reference = ReferenceKind::self);

/// Same as run_convergence_study but against a precomputed reference vorticity.
StudyResult convergence_against(const BenchmarkSpec& spec, const SolverSetup& setup, const std::vector<int>& resolutions,
                                const ScalarField& reference_vorticity, double target_time);

}  // namespace lowmach
