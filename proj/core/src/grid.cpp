#include "lowmach/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lowmach {

Grid make_grid(int nx, int ny, double lx, double ly) {
    if (nx < 4 || ny < 4) {
        throw std::invalid_argument("make_grid: need at least 4 points per direction, got " +
                                    std::to_string(nx) + "x" + std::to_string(ny));
    }
    if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
        throw std::invalid_argument("make_grid: domain lengths must be positive and finite");
    }
    Grid g;
    g.nx = nx;
    g.ny = ny;
    g.lx = lx;
    g.ly = ly;
    g.dx = lx / nx;
    g.dy = ly / ny;
    return g;
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(what) + ": fields live on different grids");
    }
}

ScalarField::ScalarField(const Grid& grid, double fill) : grid_(grid), values_(grid.size(), fill) {}

void ScalarField::fill(double value) { std::fill(values_.begin(), values_.end(), value); }

ScalarField& ScalarField::operator+=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_, "ScalarField::operator+=");
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& other) {
    require_same_grid(grid_, other.grid_, "ScalarField::operator-=");
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
    return *this;
}

ScalarField& ScalarField::operator*=(double factor) {
    for (auto& x : values_) x *= factor;
    return *this;
}

ScalarField& ScalarField::axpy(double factor, const ScalarField& other) {
    require_same_grid(grid_, other.grid_, "ScalarField::axpy");
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += factor * other.values_[k];
    return *this;
}

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double x : values_) m = std::max(m, std::abs(x));
    return m;
}

double ScalarField::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double ScalarField::mean() const { return values_.empty() ? 0.0 : sum() / static_cast<double>(values_.size()); }

bool ScalarField::all_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double x) { return std::isfinite(x); });
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double factor, ScalarField a) { return a *= factor; }

VectorField::VectorField(ScalarField first, ScalarField second) : c1(std::move(first)), c2(std::move(second)) {
    require_same_grid(c1.grid(), c2.grid(), "VectorField");
}

VectorField& VectorField::operator+=(const VectorField& other) {
    c1 += other.c1;
    c2 += other.c2;
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
    c1 -= other.c1;
    c2 -= other.c2;
    return *this;
}

VectorField& VectorField::operator*=(double factor) {
    c1 *= factor;
    c2 *= factor;
    return *this;
}

VectorField& VectorField::axpy(double factor, const VectorField& other) {
    c1.axpy(factor, other.c1);
    c2.axpy(factor, other.c2);
    return *this;
}

double VectorField::max_abs() const { return std::max(c1.max_abs(), c2.max_abs()); }
bool VectorField::all_finite() const { return c1.all_finite() && c2.all_finite(); }

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double factor, VectorField a) { return a *= factor; }

}  // namespace lowmach
