#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lowmach {

/// Periodic, uniform 2D point layout. Only the nx*ny distinct points are
/// stored; the periodic endpoint is never duplicated.
struct Grid {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;
    double ly = 0.0;
    double dx = 0.0;
    double dy = 0.0;

    std::size_t size() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }

    double x(int i) const { return i * dx; }
    double y(int j) const { return j * dy; }

    int wrap_x(int i) const { return ((i % nx) + nx) % nx; }
    int wrap_y(int j) const { return ((j % ny) + ny) % ny; }

    /// Linear storage index, x fastest. Arguments wrap periodically.
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(wrap_x(i)) + static_cast<std::size_t>(nx) * static_cast<std::size_t>(wrap_y(j));
    }

    bool operator==(const Grid&) const = default;
};

/// Throws std::invalid_argument for nx or ny < 4 or non-positive lengths.
Grid make_grid(int nx, int ny, double lx, double ly);

class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& grid, double fill = 0.0);

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    double& operator[](std::size_t k) { return values_[k]; }
    double operator[](std::size_t k) const { return values_[k]; }

    /// Periodic access.
    double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }
    double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    void fill(double value);

    ScalarField& operator+=(const ScalarField& other);
    ScalarField& operator-=(const ScalarField& other);
    ScalarField& operator*=(double factor);
    /// this += factor * other
    ScalarField& axpy(double factor, const ScalarField& other);

    double max_abs() const;
    double mean() const;
    double sum() const;
    bool all_finite() const;

private:
    Grid grid_{};
    std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double factor, ScalarField a);

struct VectorField {
    ScalarField c1;
    ScalarField c2;

    VectorField() = default;
    explicit VectorField(const Grid& grid, double fill1 = 0.0, double fill2 = 0.0)
        : c1(grid, fill1), c2(grid, fill2) {}
    VectorField(ScalarField first, ScalarField second);

    const Grid& grid() const { return c1.grid(); }

    VectorField& operator+=(const VectorField& other);
    VectorField& operator-=(const VectorField& other);
    VectorField& operator*=(double factor);
    VectorField& axpy(double factor, const VectorField& other);

    double max_abs() const;
    bool all_finite() const;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double factor, VectorField a);

/// Throws std::invalid_argument naming `what` when grids differ.
void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace lowmach
