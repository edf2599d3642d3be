#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "lowmach/benchmarks.hpp"
#include "lowmach/state.hpp"

namespace lowmach {

std::string_view version();

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);
/// Strict full-string parse; throws std::invalid_argument naming `what`.
double parse_double(std::string_view text, std::string_view what = "value");

struct SnapshotMeta {
    std::string benchmark;
    double epsilon = 0.0;
    double tau = 0.0;
    std::string scheme;
    SpatialOrder order{};
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;
    double t = 0.0;
    std::string version;
};

struct Snapshot {
    SnapshotMeta meta;
    MomentState state;
    ScalarField vorticity;
};

/// CSV: '#' metadata lines, then header x,y,u1,u2,theta,v1,v2,q,vorticity and
/// one row per point, y-major. meta.nx/ny/lx/ly/t are taken from the state.
void write_snapshot(const std::filesystem::path& path, const MomentState& state, const ScalarField& vorticity,
                    SnapshotMeta meta);
Snapshot read_snapshot(const std::filesystem::path& path);

/// Append-only time-series CSV, flushed after every record. Rejects records
/// whose t does not increase.
class TimeseriesWriter {
public:
    explicit TimeseriesWriter(const std::filesystem::path& path);
    void append(const TimeseriesRecord& record);
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    bool has_last_ = false;
    double last_t_ = 0.0;
};

/// Columns N,L1,L1_order,L2,L2_order,Linf,Linf_order; order cells empty on the first row.
void write_study_table(const std::filesystem::path& path, const StudyResult& study);

}  // namespace lowmach
