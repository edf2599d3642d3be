#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lowmach/io.hpp"
#include "test_support.hpp"

using namespace lowmach;
using namespace lowmach::test;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("lowmach_io_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::vector<std::string> lines_of(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

SnapshotMeta meta_for(const std::string& bench) {
    SnapshotMeta m;
    m.benchmark = bench;
    m.epsilon = 1e-6;
    m.tau = 0.05;
    m.scheme = "second_order_gsa";
    m.order = SpatialOrder::high_order();
    m.version = std::string(version());
    return m;
}

}  // namespace

TEST(Numbers, ShortestRoundTrip) {
    for (double x : {0.1, 1.0 / 3, -2.5e-300, 6.02214076e23, 0.0, 1e-6}) EXPECT_EQ(parse_double(format_double(x)), x);
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_THROW(parse_double("1.5x"), std::invalid_argument);
    EXPECT_THROW(parse_double(""), std::invalid_argument);
    EXPECT_THROW(parse_double(" 2"), std::invalid_argument);
}

TEST(Snapshot, ZeroStateLayout) {
    const fs::path dir = scratch_dir("zero");
    const Grid g = make_grid(4, 4, 1.0, 1.0);
    MomentState s = initialize_state(g, VectorField(g), {}, InitMode::naive);
    s.time = 0.75;
    write_snapshot(dir / "s.csv", s, ScalarField(g), meta_for("thick_shear"));
    const auto lines = lines_of(dir / "s.csv");
    std::size_t comments = 0;
    bool has_t = false;
    for (const auto& l : lines) {
        if (l.starts_with("#")) ++comments;
        if (l == "# t=0.75") has_t = true;
    }
    EXPECT_TRUE(has_t);
    ASSERT_EQ(lines.size(), comments + 1 + 16);
    EXPECT_EQ(lines[comments], "x,y,u1,u2,theta,v1,v2,q,vorticity");
    EXPECT_EQ(lines[comments + 1], "0,0,0,0,0,0,0,0,0");
    EXPECT_EQ(lines[comments + 2], "0.25,0,0,0,0,0,0,0,0");  // x varies fastest
}

TEST(Snapshot, RoundTripIsBitExact) {
    const fs::path dir = scratch_dir("roundtrip");
    const Grid g = make_grid(12, 8, 2 * kPi, 3.0);
    std::mt19937_64 rng(17);
    MomentState s;
    s.u = VectorField(random_smooth(g, rng), random_smooth(g, rng));
    s.theta = random_smooth(g, rng);
    s.v = VectorField(random_smooth(g, rng), random_smooth(g, rng));
    s.q = random_smooth(g, rng);
    s.time = 1.0 / 3;
    const ScalarField w = random_smooth(g, rng);
    write_snapshot(dir / "r.csv", s, w, meta_for("kelvin_helmholtz"));
    const Snapshot r = read_snapshot(dir / "r.csv");
    EXPECT_EQ(r.meta.benchmark, "kelvin_helmholtz");
    EXPECT_EQ(r.meta.tau, 0.05);
    EXPECT_EQ(r.meta.order, SpatialOrder::high_order());
    EXPECT_EQ(r.meta.nx, 12);
    EXPECT_EQ(r.meta.ly, 3.0);
    EXPECT_EQ(r.state.time, s.time);
    EXPECT_EQ(r.state.grid(), g);
    EXPECT_EQ(max_diff(r.state.u, s.u), 0.0);
    EXPECT_EQ(max_diff(r.state.v, s.v), 0.0);
    EXPECT_EQ(max_diff(r.state.theta, s.theta), 0.0);
    EXPECT_EQ(max_diff(r.state.q, s.q), 0.0);
    EXPECT_EQ(max_diff(r.vorticity, w), 0.0);
}

TEST(Snapshot, ReaderReportsLine) {
    const fs::path dir = scratch_dir("bad");
    const Grid g = make_grid(4, 4, 1.0, 1.0);
    write_snapshot(dir / "b.csv", initialize_state(g, VectorField(g), {}, InitMode::naive), ScalarField(g),
                   meta_for("thick_shear"));
    auto lines = lines_of(dir / "b.csv");
    lines.back() = "0.75,0.75,zero,0,0,0,0,0,0";
    {
        std::ofstream out(dir / "b.csv");
        for (const auto& l : lines) out << l << '\n';
    }
    try {
        read_snapshot(dir / "b.csv");
        FAIL() << "expected a parse error";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("b.csv:" + std::to_string(lines.size())), std::string::npos) << e.what();
    }
}

TEST(Snapshot, UnwritablePathNamesPath) {
    const fs::path dir = scratch_dir("unwritable");
    std::ofstream(dir / "blocker") << "a regular file\n";
    const fs::path target = dir / "blocker" / "x.csv";
    const Grid g = make_grid(4, 4, 1.0, 1.0);
    try {
        write_snapshot(target, initialize_state(g, VectorField(g), {}, InitMode::naive),
                       ScalarField(g), meta_for("thick_shear"));
        FAIL() << "expected an I/O error";
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find(target.string()), std::string::npos) << e.what();
    }
}

TEST(Timeseries, AppendOnlyAndMonotone) {
    const fs::path dir = scratch_dir("ts");
    {
        TimeseriesWriter w(dir / "t.csv");
        w.append({0.0, 0.0, 1.5, 0.25, 0.0});
        // Flushed per record: visible before the writer closes.
        EXPECT_EQ(lines_of(dir / "t.csv").size(), 2u);
        w.append({0.1, 1e-3, 1.5, 0.25, 0.0});
        EXPECT_THROW(w.append({0.1, 0, 0, 0, 0}), std::invalid_argument);
        EXPECT_THROW(w.append({0.05, 0, 0, 0, 0}), std::invalid_argument);
    }
    const auto lines = lines_of(dir / "t.csv");
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "t,div_linf,kinetic_energy,mean_u1,mean_u2");
    EXPECT_EQ(lines[1], "0,0,1.5,0.25,0");
    EXPECT_EQ(lines[2], "0.1,0.001,1.5,0.25,0");
}

TEST(StudyTable, ColumnsMirrorConvergenceTables) {
    const fs::path dir = scratch_dir("study");
    StudyResult s;
    s.reference_points = 257;
    s.rows.push_back({33, {0.5, 0.25, 2.0}, std::nullopt});
    s.rows.push_back({65, {0.125, 0.125, 0.5}, ErrorTriple{2.0, 1.0, 2.0}});
    write_study_table(dir / "s.csv", s);
    const auto lines = lines_of(dir / "s.csv");
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "N,L1,L1_order,L2,L2_order,Linf,Linf_order");
    EXPECT_EQ(lines[1], "33,0.5,,0.25,,2,");
    EXPECT_EQ(lines[2], "65,0.125,2,0.125,1,0.5,2");
}
