#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lowmach {

using Matrix = std::vector<std::vector<double>>;

/// Double Butcher tableau: explicit (atil, wtil, ctil) and diagonally implicit
/// (a, w, c) parts with s stages.
struct IMEXTableau {
    std::string name;
    int s = 0;
    Matrix a;
    Matrix atil;
    std::vector<double> w;
    std::vector<double> wtil;
    std::vector<double> c;
    std::vector<double> ctil;
};

enum class SchemeType { A, CK, ARS, invalid };

struct TableauReport {
    SchemeType scheme_type = SchemeType::invalid;
    bool isa = false;
    bool gsa = false;
    /// 1, 2, or 0 when neither order condition set holds.
    int classical_order = 0;
    /// Human-readable reasons for an invalid or non-GSA result.
    std::vector<std::string> problems;
};

/// Builds a tableau with abscissae from row sums unless c / ctil are given, in
/// which case they are kept as-is and checked by classify().
IMEXTableau make_tableau(std::string name, Matrix a, Matrix atil, std::vector<double> w, std::vector<double> wtil,
                         std::optional<std::vector<double>> c = std::nullopt,
                         std::optional<std::vector<double>> ctil = std::nullopt);

/// "euler_gsa" or "second_order_gsa" (c = 2.25, gamma = (c - 1/2)/(c - 1)).
IMEXTableau builtin_tableau(std::string_view name);
std::vector<std::string> builtin_tableau_names();

TableauReport classify(const IMEXTableau& t);

std::string_view to_string(SchemeType type);
/// Multi-line summary of a report, used by the CLI.
std::string describe(const IMEXTableau& t, const TableauReport& r);

}  // namespace lowmach
