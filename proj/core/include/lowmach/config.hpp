#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowmach/benchmarks.hpp"

namespace lowmach {

/// Invalid configuration; the message starts with the offending key path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    BenchmarkSpec benchmark = BenchmarkSpec::preset("thick_shear");
    SolverSetup setup{};
    /// Tableau name, or "inline" for a [tableau] block.
    std::string scheme = "second_order_gsa";
    /// Distinct points per direction for `run`.
    int n = 64;

    std::vector<int> resolutions{32, 64, 128};
    int reference = 256;
    double target_time = 1.0;
    ReferenceKind reference_kind = ReferenceKind::self;

    std::filesystem::path output_dir = "output";
    int snapshots = 20;
    /// Reserved; the solver is deterministic.
    std::uint64_t seed = 0;
};

/// INI document: top-level keys plus [case], [study], [output] and
/// [tableau] sections. Unknown keys are rejected. `overrides` maps key paths
/// ("epsilon", "study.reference", ...) to values applied on top of the text.
RunConfig parse_config(const std::string& text, const std::map<std::string, std::string>& overrides = {});
RunConfig load_config(const std::filesystem::path& path, const std::map<std::string, std::string>& overrides = {});

/// Reads only the [tableau] section of a config file, without classifying it.
IMEXTableau load_tableau_section(const std::filesystem::path& path);

/// Output directory after applying the LOWMACH_OUTPUT_DIR environment override.
std::filesystem::path effective_output_dir(const RunConfig& config);

}  // namespace lowmach
