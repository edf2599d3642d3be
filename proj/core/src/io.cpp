#include "lowmach/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

#include "lowmach/version.hpp"

namespace lowmach {

std::string_view version() { return kVersion; }

std::string format_double(double x) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, r.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto r = std::from_chars(first, last, value);
    if (text.empty() || r.ec != std::errc() || r.ptr != last) {
        throw std::invalid_argument(std::string(what) + ": not a number: '" + std::string(text) + "'");
    }
    return value;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path, std::ios::openmode mode = std::ios::trunc) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::out | mode);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing" + (ec ? ": " + ec.message() : ""));
    }
    return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

constexpr const char* kSnapshotHeader = "x,y,u1,u2,theta,v1,v2,q,vorticity";

}  // namespace

void write_snapshot(const std::filesystem::path& path, const MomentState& state, const ScalarField& vorticity,
                    SnapshotMeta meta) {
    const Grid& g = state.grid();
    require_same_grid(g, vorticity.grid(), "write_snapshot");
    meta.nx = g.nx;
    meta.ny = g.ny;
    meta.lx = g.lx;
    meta.ly = g.ly;
    meta.t = state.time;
    if (meta.version.empty()) meta.version = std::string(version());

    std::ofstream out = open_for_write(path);
    out << "# benchmark=" << meta.benchmark << "\n"
        << "# epsilon=" << format_double(meta.epsilon) << "\n"
        << "# tau=" << format_double(meta.tau) << "\n"
        << "# scheme=" << meta.scheme << "\n"
        << "# upwind_order=" << static_cast<int>(meta.order.upwind) << "\n"
        << "# central_order=" << static_cast<int>(meta.order.central) << "\n"
        << "# nx=" << meta.nx << "\n"
        << "# ny=" << meta.ny << "\n"
        << "# lx=" << format_double(meta.lx) << "\n"
        << "# ly=" << format_double(meta.ly) << "\n"
        << "# t=" << format_double(meta.t) << "\n"
        << "# version=" << meta.version << "\n"
        << kSnapshotHeader << "\n";
    std::string row;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.index(i, j);
            const double values[] = {g.x(i),        g.y(j),        state.u.c1[k], state.u.c2[k], state.theta[k],
                                     state.v.c1[k], state.v.c2[k], state.q[k],    vorticity[k]};
            row.clear();
            for (std::size_t c = 0; c < std::size(values); ++c) {
                if (c) row += ',';
                row += format_double(values[c]);
            }
            out << row << '\n';
        }
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    Snapshot snap;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + msg);
    };
    int upwind = 1, central = 2;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] != '#') break;
        const std::string_view body = std::string_view(line).substr(line.find_first_not_of("# "));
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) fail("malformed metadata line");
        const std::string key(body.substr(0, eq));
        const std::string_view value = body.substr(eq + 1);
        try {
            if (key == "benchmark") snap.meta.benchmark = std::string(value);
            else if (key == "epsilon") snap.meta.epsilon = parse_double(value, key);
            else if (key == "tau") snap.meta.tau = parse_double(value, key);
            else if (key == "scheme") snap.meta.scheme = std::string(value);
            else if (key == "upwind_order") upwind = static_cast<int>(parse_double(value, key));
            else if (key == "central_order") central = static_cast<int>(parse_double(value, key));
            else if (key == "nx") snap.meta.nx = static_cast<int>(parse_double(value, key));
            else if (key == "ny") snap.meta.ny = static_cast<int>(parse_double(value, key));
            else if (key == "lx") snap.meta.lx = parse_double(value, key);
            else if (key == "ly") snap.meta.ly = parse_double(value, key);
            else if (key == "t") snap.meta.t = parse_double(value, key);
            else if (key == "version") snap.meta.version = std::string(value);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    if (line != kSnapshotHeader) fail("expected column header '" + std::string(kSnapshotHeader) + "'");
    snap.meta.order = SpatialOrder::from_ints(upwind, central);
    const Grid g = make_grid(snap.meta.nx, snap.meta.ny, snap.meta.lx, snap.meta.ly);
    snap.state.u = VectorField(g);
    snap.state.v = VectorField(g);
    snap.state.theta = ScalarField(g);
    snap.state.q = ScalarField(g);
    snap.state.time = snap.meta.t;
    snap.vorticity = ScalarField(g);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != 9) fail("expected 9 columns");
        if (rows >= g.size()) fail("more data rows than nx*ny");
        const int i = static_cast<int>(rows % static_cast<std::size_t>(g.nx));
        const int j = static_cast<int>(rows / static_cast<std::size_t>(g.nx));
        const std::size_t k = g.index(i, j);
        try {
            snap.state.u.c1[k] = parse_double(cells[2], "u1");
            snap.state.u.c2[k] = parse_double(cells[3], "u2");
            snap.state.theta[k] = parse_double(cells[4], "theta");
            snap.state.v.c1[k] = parse_double(cells[5], "v1");
            snap.state.v.c2[k] = parse_double(cells[6], "v2");
            snap.state.q[k] = parse_double(cells[7], "q");
            snap.vorticity[k] = parse_double(cells[8], "vorticity");
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        ++rows;
    }
    if (rows != g.size()) fail("expected " + std::to_string(g.size()) + " data rows, found " + std::to_string(rows));
    return snap;
}

TimeseriesWriter::TimeseriesWriter(const std::filesystem::path& path) : path_(path), out_(open_for_write(path)) {
    out_ << "t,div_linf,kinetic_energy,mean_u1,mean_u2\n";
    out_.flush();
}

void TimeseriesWriter::append(const TimeseriesRecord& r) {
    if (has_last_ && !(r.t > last_t_)) {
        throw std::invalid_argument("time series record at t = " + format_double(r.t) + " does not follow t = " +
                                    format_double(last_t_));
    }
    out_ << format_double(r.t) << ',' << format_double(r.div_linf) << ',' << format_double(r.kinetic_energy) << ','
         << format_double(r.mean_u1) << ',' << format_double(r.mean_u2) << '\n';
    out_.flush();
    if (!out_) throw std::runtime_error("write failed for '" + path_.string() + "'");
    has_last_ = true;
    last_t_ = r.t;
}

void write_study_table(const std::filesystem::path& path, const StudyResult& study) {
    std::ofstream out = open_for_write(path);
    out << "N,L1,L1_order,L2,L2_order,Linf,Linf_order\n";
    for (const auto& row : study.rows) {
        auto order = [&](double ErrorTriple::*m) { return row.orders ? format_double((*row.orders).*m) : std::string(); };
        out << row.n_points << ',' << format_double(row.errors.l1) << ',' << order(&ErrorTriple::l1) << ','
            << format_double(row.errors.l2) << ',' << order(&ErrorTriple::l2) << ',' << format_double(row.errors.linf)
            << ',' << order(&ErrorTriple::linf) << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace lowmach
