#include "lowmach/imex.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lowmach {

namespace {

constexpr double kTol = 1e-12;

std::vector<double> row_sums(const Matrix& m) {
    std::vector<double> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        double s = 0.0;
        for (double x : row) s += x;
        out.push_back(s);
    }
    return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double total(const std::vector<double>& a) {
    double s = 0.0;
    for (double x : a) s += x;
    return s;
}

bool shape_ok(const IMEXTableau& t, std::vector<std::string>& problems) {
    const std::size_t s = static_cast<std::size_t>(t.s);
    auto square = [&](const Matrix& m, const char* what) {
        if (m.size() != s) {
            problems.push_back(std::string(what) + " must have " + std::to_string(s) + " rows");
            return false;
        }
        for (const auto& row : m) {
            if (row.size() != s) {
                problems.push_back(std::string(what) + " must be square");
                return false;
            }
        }
        return true;
    };
    auto vec = [&](const std::vector<double>& v, const char* what) {
        if (v.size() != s) {
            problems.push_back(std::string(what) + " must have " + std::to_string(s) + " entries");
            return false;
        }
        return true;
    };
    if (t.s < 1) {
        problems.push_back("tableau needs at least one stage");
        return false;
    }
    bool ok = square(t.a, "A");
    ok = square(t.atil, "Atil") && ok;
    ok = vec(t.w, "w") && ok;
    ok = vec(t.wtil, "wtil") && ok;
    ok = vec(t.c, "c") && ok;
    ok = vec(t.ctil, "ctil") && ok;
    return ok;
}

}  // namespace

IMEXTableau make_tableau(std::string name, Matrix a, Matrix atil, std::vector<double> w, std::vector<double> wtil,
                         std::optional<std::vector<double>> c, std::optional<std::vector<double>> ctil) {
    IMEXTableau t;
    t.name = std::move(name);
    t.s = static_cast<int>(a.size());
    t.c = c ? std::move(*c) : row_sums(a);
    t.ctil = ctil ? std::move(*ctil) : row_sums(atil);
    t.a = std::move(a);
    t.atil = std::move(atil);
    t.w = std::move(w);
    t.wtil = std::move(wtil);
    return t;
}

IMEXTableau builtin_tableau(std::string_view name) {
    if (name == "euler_gsa") {
        return make_tableau("euler_gsa", {{0.0, 0.0}, {0.0, 1.0}}, {{0.0, 0.0}, {1.0, 0.0}}, {0.0, 1.0}, {1.0, 0.0});
    }
    if (name == "second_order_gsa") {
        const double c = 2.25;
        const double gamma = (c - 0.5) / (c - 1.0);
        const double b = 1.0 / (2.0 * c);
        return make_tableau("second_order_gsa", {{0.0, 0.0, 0.0}, {0.0, c, 0.0}, {0.0, 1.0 - gamma, gamma}},
                            {{0.0, 0.0, 0.0}, {c, 0.0, 0.0}, {1.0 - b, b, 0.0}}, {0.0, 1.0 - gamma, gamma},
                            {1.0 - b, b, 0.0});
    }
    throw std::invalid_argument("unknown tableau '" + std::string(name) + "' (known: euler_gsa, second_order_gsa)");
}

std::vector<std::string> builtin_tableau_names() { return {"euler_gsa", "second_order_gsa"}; }

TableauReport classify(const IMEXTableau& t) {
    TableauReport r;
    if (!shape_ok(t, r.problems)) return r;
    const int s = t.s;
    auto at = [](const Matrix& m, int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };

    bool structural = true;
    for (int i = 0; i < s; ++i) {
        for (int j = i; j < s; ++j) {
            if (at(t.atil, i, j) != 0.0) {
                r.problems.push_back("Atil is not strictly lower triangular");
                structural = false;
                i = s;
                break;
            }
        }
    }
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            if (at(t.a, i, j) != 0.0) {
                r.problems.push_back("A is not lower triangular");
                structural = false;
                i = s;
                break;
            }
        }
    }
    const auto c = row_sums(t.a);
    const auto ctil = row_sums(t.atil);
    for (int i = 0; i < s; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (std::abs(c[k] - t.c[k]) > kTol || std::abs(ctil[k] - t.ctil[k]) > kTol) {
            r.problems.push_back("abscissa " + std::to_string(i + 1) + " differs from the row sum");
            structural = false;
        }
    }
    if (!structural) return r;

    bool all_diag = true;
    bool rest_diag = true;
    for (int i = 0; i < s; ++i) {
        if (at(t.a, i, i) == 0.0) {
            all_diag = false;
            if (i > 0) rest_diag = false;
        }
    }
    bool first_row_zero = true;
    for (int j = 0; j < s; ++j) first_row_zero = first_row_zero && at(t.a, 0, j) == 0.0;
    bool first_col_zero = true;
    for (int i = 1; i < s; ++i) first_col_zero = first_col_zero && at(t.a, i, 0) == 0.0;

    if (all_diag) {
        r.scheme_type = SchemeType::A;
    } else if (first_row_zero && rest_diag && s > 1) {
        r.scheme_type = first_col_zero ? SchemeType::ARS : SchemeType::CK;
    } else {
        r.problems.push_back("implicit part is neither type A nor CK (zero diagonal outside the first stage)");
        return r;
    }

    r.isa = true;
    for (int i = 0; i < s; ++i) r.isa = r.isa && std::abs(at(t.a, s - 1, i) - t.w[static_cast<std::size_t>(i)]) <= kTol;
    r.gsa = r.isa;
    for (int i = 0; i + 1 < s; ++i) {
        r.gsa = r.gsa && std::abs(at(t.atil, s - 1, i) - t.wtil[static_cast<std::size_t>(i)]) <= kTol;
    }
    if (!r.isa) r.problems.push_back("last row of A differs from w (not stiffly accurate)");
    else if (!r.gsa) r.problems.push_back("last row of Atil differs from wtil (not globally stiffly accurate)");

    const bool order1 = std::abs(total(t.w) - 1.0) <= kTol && std::abs(total(t.wtil) - 1.0) <= kTol;
    const bool order2 = order1 && std::abs(dot(t.w, c) - 0.5) <= kTol && std::abs(dot(t.wtil, ctil) - 0.5) <= kTol &&
                        std::abs(dot(t.w, ctil) - 0.5) <= kTol && std::abs(dot(t.wtil, c) - 0.5) <= kTol;
    r.classical_order = order2 ? 2 : (order1 ? 1 : 0);
    return r;
}

std::string_view to_string(SchemeType type) {
    switch (type) {
        case SchemeType::A: return "A";
        case SchemeType::CK: return "CK";
        case SchemeType::ARS: return "ARS";
        case SchemeType::invalid: return "invalid";
    }
    return "invalid";
}

std::string describe(const IMEXTableau& t, const TableauReport& r) {
    std::ostringstream os;
    os << "tableau: " << t.name << " (s = " << t.s << ")\n"
       << "type: " << to_string(r.scheme_type) << "\n"
       << "isa: " << (r.isa ? "yes" : "no") << "\n"
       << "gsa: " << (r.gsa ? "yes" : "no") << "\n"
       << "order: " << (r.classical_order == 0 ? std::string("unknown") : std::to_string(r.classical_order)) << "\n";
    for (const auto& p : r.problems) os << "problem: " << p << "\n";
    return os.str();
}

}  // namespace lowmach
