#include "lowmach/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "lowmach/io.hpp"

namespace lowmach {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"", {"benchmark", "epsilon", "tau", "scheme", "n", "cfl", "dt", "upwind_order", "central_order", "init",
              "alpha", "alpha0", "seed"}},
        {"case", {"end_time", "rho_s", "delta", "lx", "ly"}},
        {"study", {"resolutions", "reference", "target_time", "reference_kind"}},
        {"output", {"directory", "snapshots"}},
        {"tableau", {"name", "A", "Atil", "w", "wtil"}},
    };
    return keys;
}

[[noreturn]] void fail(const std::string& key, const std::string& msg) { throw ConfigError(key + ": " + msg); }

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

class Reader {
public:
    explicit Reader(pt::ptree tree) : tree_(std::move(tree)) {}

    bool has(const std::string& key) const { return tree_.get_child_optional(pt::ptree::path_type(key, '.')).has_value(); }

    std::string str(const std::string& key) const {
        return trimmed(tree_.get_child(pt::ptree::path_type(key, '.')).data());
    }

    double number(const std::string& key) const {
        try {
            return parse_double(str(key), key);
        } catch (const std::invalid_argument&) {
            fail(key, "expected a number, got '" + str(key) + "'");
        }
    }

    int integer(const std::string& key) const {
        const double x = number(key);
        if (x != std::floor(x) || std::abs(x) > 1e9) fail(key, "expected an integer, got '" + str(key) + "'");
        return static_cast<int>(x);
    }

    nlohmann::json json(const std::string& key) const {
        try {
            return nlohmann::json::parse(str(key));
        } catch (const nlohmann::json::exception& e) {
            fail(key, std::string("expected a JSON list: ") + e.what());
        }
    }

    std::vector<double> vector(const std::string& key) const {
        const auto j = json(key);
        if (!j.is_array()) fail(key, "expected a list of numbers");
        std::vector<double> out;
        for (const auto& x : j) {
            if (!x.is_number()) fail(key, "expected a list of numbers");
            out.push_back(x.get<double>());
        }
        return out;
    }

    Matrix matrix(const std::string& key) const {
        const auto j = json(key);
        if (!j.is_array()) fail(key, "expected a list of rows");
        Matrix out;
        for (const auto& row : j) {
            if (!row.is_array()) fail(key, "expected a list of rows");
            std::vector<double> r;
            for (const auto& x : row) {
                if (!x.is_number()) fail(key, "expected numeric matrix entries");
                r.push_back(x.get<double>());
            }
            out.push_back(std::move(r));
        }
        return out;
    }

    const pt::ptree& tree() const { return tree_; }

private:
    pt::ptree tree_;
};

void check_keys(const pt::ptree& tree) {
    const auto& allowed = allowed_keys();
    for (const auto& [key, child] : tree) {
        if (child.empty()) {
            if (!allowed.at("").contains(key)) fail(key, "unknown key");
            continue;
        }
        const auto section = allowed.find(key);
        if (key.empty() || section == allowed.end()) fail(key, "unknown section");
        for (const auto& [sub, subchild] : child) {
            if (!section->second.contains(sub) || !subchild.empty()) fail(key + "." + sub, "unknown key");
        }
    }
}

void apply_override(pt::ptree& tree, const std::string& path, const std::string& value) {
    const auto dot = path.find('.');
    if (dot == std::string::npos) {
        if (!allowed_keys().at("").contains(path)) fail(path, "unknown key");
    } else {
        const auto section = allowed_keys().find(path.substr(0, dot));
        if (section == allowed_keys().end() || path.substr(0, dot).empty()) fail(path, "unknown section");
        if (!section->second.contains(path.substr(dot + 1))) fail(path, "unknown key");
    }
    tree.put(pt::ptree::path_type(path, '.'), value);
}

void require_non_negative(double x, const std::string& key) {
    if (!(x >= 0.0) || !std::isfinite(x)) fail(key, "must be finite and >= 0");
}

void require_positive(double x, const std::string& key) {
    if (!(x > 0.0) || !std::isfinite(x)) fail(key, "must be finite and > 0");
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::map<std::string, std::string>& overrides) {
    pt::ptree tree;
    try {
        std::istringstream in(text);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    check_keys(tree);
    for (const auto& [key, value] : overrides) apply_override(tree, key, value);
    const Reader r(std::move(tree));

    RunConfig c;
    if (!r.has("benchmark") || r.str("benchmark").empty()) fail("benchmark", "required");
    try {
        c.benchmark = BenchmarkSpec::preset(r.str("benchmark"));
    } catch (const std::invalid_argument& e) {
        fail("benchmark", e.what());
    }
    if (r.has("case.end_time")) c.benchmark.end_time = r.number("case.end_time");
    if (r.has("case.rho_s")) c.benchmark.rho_s = r.number("case.rho_s");
    if (r.has("case.delta")) c.benchmark.delta = r.number("case.delta");
    if (r.has("case.lx")) c.benchmark.lx = r.number("case.lx");
    if (r.has("case.ly")) c.benchmark.ly = r.number("case.ly");
    require_non_negative(c.benchmark.end_time, "case.end_time");
    require_positive(c.benchmark.lx, "case.lx");
    require_positive(c.benchmark.ly, "case.ly");
    if (c.benchmark.name != "kelvin_helmholtz") require_positive(c.benchmark.rho_s, "case.rho_s");

    if (!r.has("epsilon")) fail("epsilon", "required");
    c.setup.params.epsilon = r.number("epsilon");
    require_non_negative(c.setup.params.epsilon, "epsilon");
    if (!r.has("tau")) fail("tau", "required");
    c.setup.params.tau = r.number("tau");
    require_non_negative(c.setup.params.tau, "tau");

    if (r.has("n")) c.n = r.integer("n");
    if (c.n < 4) fail("n", "must be at least 4");

    if (r.has("cfl") && r.has("dt")) fail("cfl", "give either cfl or dt, not both");
    if (r.has("cfl")) {
        c.setup.controls.cfl = r.number("cfl");
        require_positive(c.setup.controls.cfl, "cfl");
    }
    if (r.has("dt")) {
        c.setup.controls.dt = r.number("dt");
        require_positive(*c.setup.controls.dt, "dt");
    }

    int upwind = 1, central = 2;
    if (r.has("upwind_order")) upwind = r.integer("upwind_order");
    if (r.has("central_order")) central = r.integer("central_order");
    try {
        c.setup.order = SpatialOrder::from_ints(upwind, central);
    } catch (const std::invalid_argument& e) {
        fail(r.has("upwind_order") && upwind != 1 && upwind != 3 ? "upwind_order" : "central_order", e.what());
    }

    if (r.has("alpha")) c.setup.lf.alpha = r.number("alpha");
    if (r.has("alpha0")) c.setup.lf.alpha0 = r.number("alpha0");
    require_non_negative(c.setup.lf.alpha, "alpha");
    require_non_negative(c.setup.lf.alpha0, "alpha0");

    if (r.has("init")) {
        const std::string mode = r.str("init");
        if (mode == "well_prepared") c.setup.init = InitMode::well_prepared;
        else if (mode == "naive") c.setup.init = InitMode::naive;
        else fail("init", "expected well_prepared or naive, got '" + mode + "'");
    }
    if (r.has("seed")) {
        const int seed = r.integer("seed");
        if (seed < 0) fail("seed", "must be >= 0");
        c.seed = static_cast<std::uint64_t>(seed);
    }

    const bool inline_tableau = r.has("tableau");
    if (r.has("scheme")) c.scheme = r.str("scheme");
    else if (inline_tableau) c.scheme = "inline";
    if (c.scheme == "inline") {
        if (!inline_tableau) fail("scheme", "'inline' needs a [tableau] section");
        for (const char* k : {"tableau.A", "tableau.Atil", "tableau.w", "tableau.wtil"}) {
            if (!r.has(k)) fail(k, "required for an inline tableau");
        }
        const std::string name = r.has("tableau.name") ? r.str("tableau.name") : "inline";
        IMEXTableau t = make_tableau(name, r.matrix("tableau.A"), r.matrix("tableau.Atil"), r.vector("tableau.w"),
                                     r.vector("tableau.wtil"));
        const TableauReport report = classify(t);
        if (report.scheme_type == SchemeType::invalid || !report.gsa) {
            fail("tableau", "rejected, a valid GSA tableau is required\n" + describe(t, report));
        }
        c.setup.tableau = std::move(t);
    } else {
        if (inline_tableau) fail("tableau", "section given but scheme = '" + c.scheme + "'");
        try {
            c.setup.tableau = builtin_tableau(c.scheme);
        } catch (const std::invalid_argument& e) {
            fail("scheme", e.what());
        }
    }

    if (r.has("study.resolutions")) {
        c.resolutions.clear();
        for (double x : r.vector("study.resolutions")) {
            if (x != std::floor(x) || x < 4) fail("study.resolutions", "entries must be integers >= 4");
            c.resolutions.push_back(static_cast<int>(x));
        }
        if (c.resolutions.empty()) fail("study.resolutions", "must not be empty");
    }
    if (r.has("study.reference")) c.reference = r.integer("study.reference");
    for (int n : c.resolutions) {
        if (n >= c.reference || c.reference % n != 0) {
            fail("study.resolutions", std::to_string(n) + " does not nest under reference " + std::to_string(c.reference));
        }
    }
    if (r.has("study.target_time")) c.target_time = r.number("study.target_time");
    require_non_negative(c.target_time, "study.target_time");
    if (r.has("study.reference_kind")) {
        const std::string kind = r.str("study.reference_kind");
        if (kind == "self") c.reference_kind = ReferenceKind::self;
        else if (kind == "limit") c.reference_kind = ReferenceKind::limit;
        else fail("study.reference_kind", "expected self or limit, got '" + kind + "'");
    }

    if (r.has("output.directory")) c.output_dir = r.str("output.directory");
    if (r.has("output.snapshots")) c.snapshots = r.integer("output.snapshots");
    if (c.snapshots < 0) fail("output.snapshots", "must be >= 0");
    return c;
}

RunConfig load_config(const std::filesystem::path& path, const std::map<std::string, std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string() + ": cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), overrides);
}

IMEXTableau load_tableau_section(const std::filesystem::path& path) {
    pt::ptree tree;
    try {
        pt::read_ini(path.string(), tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    check_keys(tree);
    const Reader r(std::move(tree));
    for (const char* k : {"tableau.A", "tableau.Atil", "tableau.w", "tableau.wtil"}) {
        if (!r.has(k)) fail(k, "required for an inline tableau");
    }
    return make_tableau(r.has("tableau.name") ? r.str("tableau.name") : "inline", r.matrix("tableau.A"),
                        r.matrix("tableau.Atil"), r.vector("tableau.w"), r.vector("tableau.wtil"));
}

std::filesystem::path effective_output_dir(const RunConfig& config) {
    if (const char* env = std::getenv("LOWMACH_OUTPUT_DIR"); env != nullptr && *env != '\0') return env;
    return config.output_dir;
}

}  // namespace lowmach
