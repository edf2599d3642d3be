#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "lowmach/config.hpp"
#include "lowmach/io.hpp"

namespace {

constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

// Flags that map one-to-one onto config keys.
struct Overrides {
    std::map<std::string, std::string> values;
    std::vector<std::string> raw;

    void add_flags(CLI::App* cmd) {
        static const std::pair<const char*, const char*> flags[] = {
            {"benchmark", "thick_shear, thin_shear or kelvin_helmholtz"},
            {"epsilon", "scaling parameter (>= 0, 0 = exact limit)"},
            {"tau", "relaxation coefficient (>= 0, Re = 4/tau)"},
            {"scheme", "euler_gsa, second_order_gsa or inline"},
            {"n", "distinct grid points per direction"},
            {"cfl", "dt = cfl * min(dx, dy)"},
            {"dt", "fixed time step"},
            {"upwind-order", "1 or 3"},
            {"central-order", "2 or 4"},
            {"init", "well_prepared or naive"},
            {"end-time", "benchmark end time"},
            {"output", "output directory"},
        };
        for (const auto& [flag, help] : flags) {
            std::string key = flag;
            for (auto& ch : key) ch = ch == '-' ? '_' : ch;
            if (key == "end_time") key = "case.end_time";
            if (key == "output") key = "output.directory";
            cmd->add_option_function<std::string>(std::string("--") + flag, [this, key](const std::string& v) { values[key] = v; },
                                                  help);
        }
        cmd->add_option("--set", raw, "generic override key=value (e.g. study.reference=256)");
    }

    std::map<std::string, std::string> collect() const {
        auto out = values;
        for (const auto& kv : raw) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw lowmach::ConfigError(kv + ": expected key=value");
            out[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        return out;
    }
};

lowmach::RunConfig load(const std::optional<std::string>& path, const Overrides& o) {
    if (path) return lowmach::load_config(*path, o.collect());
    return lowmach::parse_config("", o.collect());
}

lowmach::SnapshotMeta meta_for(const lowmach::RunConfig& c) {
    lowmach::SnapshotMeta m;
    m.benchmark = c.benchmark.name;
    m.epsilon = c.setup.params.epsilon;
    m.tau = c.setup.params.tau;
    m.scheme = c.setup.tableau.name;
    m.order = c.setup.order;
    return m;
}

int do_run(const lowmach::RunConfig& c) {
    const auto dir = lowmach::effective_output_dir(c);
    lowmach::TimeseriesWriter series(dir / "timeseries.csv");
    const lowmach::SnapshotMeta meta = meta_for(c);
    lowmach::RunObserver obs;
    obs.on_record = [&](const lowmach::TimeseriesRecord& r) { series.append(r); };
    obs.on_snapshot = [&](const lowmach::MomentState& s, const lowmach::ScalarField& w, int index) {
        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_%04d.csv", index);
        lowmach::write_snapshot(dir / name, s, w, meta);
    };
    const auto summary = lowmach::run_benchmark(c.benchmark, c.setup, c.n, obs, c.snapshots);
    std::cout << "benchmark " << c.benchmark.name << " on " << c.n << "x" << c.n << ": " << summary.steps
              << " steps of dt = " << lowmach::format_double(summary.dt) << " to t = "
              << lowmach::format_double(summary.final_state.time) << "\n"
              << "peak |vorticity|: " << lowmach::format_double(summary.peak_vorticity_initial) << " -> "
              << lowmach::format_double(summary.peak_vorticity_final) << "\n"
              << "final div_linf: " << lowmach::format_double(summary.timeseries.back().div_linf) << "\n"
              << "output: " << dir.string() << "\n";
    return 0;
}

int do_study(const lowmach::RunConfig& c) {
    const auto dir = lowmach::effective_output_dir(c);
    const auto study = lowmach::run_convergence_study(c.benchmark, c.setup, c.resolutions, c.reference,
                                                      c.target_time, c.reference_kind);
    lowmach::write_study_table(dir / "study.csv", study);
    std::cout << "N      L1          order   L2          order   Linf        order\n";
    for (const auto& row : study.rows) {
        std::printf("%-6d %.4e  %6s  %.4e  %6s  %.4e  %6s\n", row.n_points, row.errors.l1,
                    row.orders ? std::to_string(row.orders->l1).substr(0, 6).c_str() : "", row.errors.l2,
                    row.orders ? std::to_string(row.orders->l2).substr(0, 6).c_str() : "", row.errors.linf,
                    row.orders ? std::to_string(row.orders->linf).substr(0, 6).c_str() : "");
    }
    std::cout << "reference N = " << study.reference_points << ", table: " << (dir / "study.csv").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic-preserving IMEX solver for the low-Mach lattice Boltzmann moment system"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lowmach::version()));

    std::optional<std::string> run_config, study_config, tableau_config;
    Overrides run_over, study_over;
    std::string tableau_name;

    auto* run = app.add_subcommand("run", "run one benchmark, writing snapshots and a time series");
    run->add_option("-c,--config", run_config, "INI config file");
    run_over.add_flags(run);

    auto* study = app.add_subcommand("study", "grid convergence study of the vorticity");
    study->add_option("-c,--config", study_config, "INI config file");
    study_over.add_flags(study);

    auto* validate = app.add_subcommand("validate-tableau", "classify a built-in or inline IMEX tableau");
    auto* name_opt = validate->add_option("--name", tableau_name, "built-in tableau name");
    validate->add_option("-c,--config", tableau_config, "config file with a [tableau] section")->excludes(name_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*run) return do_run(load(run_config, run_over));
        if (*study) return do_study(load(study_config, study_over));
        if (*validate) {
            lowmach::IMEXTableau t;
            if (tableau_config) {
                t = lowmach::load_tableau_section(*tableau_config);
            } else if (!tableau_name.empty()) {
                t = lowmach::builtin_tableau(tableau_name);
            } else {
                std::cerr << "validate-tableau: give --name or --config\n";
                return kConfigError;
            }
            const auto report = lowmach::classify(t);
            std::cout << lowmach::describe(t, report);
            return report.scheme_type != lowmach::SchemeType::invalid && report.gsa ? 0 : kConfigError;
        }
    } catch (const lowmach::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return kRuntimeError;
    }
    return 0;
}
