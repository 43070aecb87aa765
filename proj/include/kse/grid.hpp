#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace kse {

/// Uniform periodic grid on the square torus [0, L)^2 with n points per axis.
///
/// n must be a power of two (>= 8) so that transforms, dealiasing bands and
/// refinement studies nest dyadically.  Integer frequencies live in
/// (-n/2, n/2]; the physical wavenumber of frequency m is 2*pi*m/L.
class Grid {
public:
    Grid(int n, double length) : n_(n), length_(length) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("Grid: n must be a power of two >= 8, got " +
                                        std::to_string(n));
        if (!(length > 0.0) || !std::isfinite(length))
            throw std::invalid_argument("Grid: period length must be positive and finite");
        dx_ = length_ / n_;
        k0_ = 2.0 * pi() * (1.0 / length_);
    }

    int n() const { return n_; }
    double length() const { return length_; }
    double dx() const { return dx_; }
    double cell_area() const { return dx_ * dx_; }

    int size() const { return n_ * n_; }
    int spectral_cols() const { return n_ / 2 + 1; }
    int spectral_size() const { return n_ * spectral_cols(); }

    /// Signed integer frequency of row/column index i, in (-n/2, n/2].
    int freq(int i) const { return i <= n_ / 2 ? i : i - n_; }

    /// Physical wavenumber 2*pi*m/L of index i.
    double wavenumber(int i) const { return k0_ * freq(i); }

    /// Wavenumber of an explicit integer frequency.
    double wavenumber_of(int m) const { return k0_ * m; }

    double x(int i) const { return dx_ * i; }

    bool operator==(const Grid& other) const {
        return n_ == other.n_ && length_ == other.length_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

    static constexpr double pi() { return 3.14159265358979323846; }
    static constexpr double two_pi() { return 2.0 * pi(); }

private:
    int n_;
    double length_;
    double dx_;
    double k0_;
};

} // namespace kse
