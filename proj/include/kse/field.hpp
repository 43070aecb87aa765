#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <new>
#include <stdexcept>
#include <vector>

#include "kse/grid.hpp"

namespace kse {

namespace detail {

/// 64-byte aligned allocator so field storage is always acceptable to FFTW's
/// SIMD paths (new-array execute requires the same alignment class as the
/// buffers the plan was created with).
template <class T>
struct AlignedAllocator {
    using value_type = T;
    static constexpr std::size_t alignment = 64;

    AlignedAllocator() = default;
    template <class U>
    AlignedAllocator(const AlignedAllocator<U>&) {}

    T* allocate(std::size_t count) {
        return static_cast<T*>(::operator new(count * sizeof(T), std::align_val_t(alignment)));
    }
    void deallocate(T* p, std::size_t) noexcept {
        ::operator delete(p, std::align_val_t(alignment));
    }
    template <class U>
    bool operator==(const AlignedAllocator<U>&) const { return true; }
    template <class U>
    bool operator!=(const AlignedAllocator<U>&) const { return false; }
};

} // namespace detail

using RealBuffer = std::vector<double, detail::AlignedAllocator<double>>;
using ComplexBuffer = std::vector<std::complex<double>, detail::AlignedAllocator<std::complex<double>>>;

/// Real-space samples of a scalar on the grid; value(i, j) = f(x_i, y_j)
/// with x the first coordinate axis, stored row-major.
class ScalarField {
public:
    explicit ScalarField(const Grid& grid, double fill = 0.0)
        : grid_(grid), values_(static_cast<std::size_t>(grid.size()), fill) {}

    const Grid& grid() const { return grid_; }

    double& operator()(int i, int j) { return values_[static_cast<std::size_t>(i) * grid_.n() + j]; }
    double operator()(int i, int j) const { return values_[static_cast<std::size_t>(i) * grid_.n() + j]; }

    RealBuffer& values() { return values_; }
    const RealBuffer& values() const { return values_; }
    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }
    std::size_t size() const { return values_.size(); }

    /// Fill from a callable f(x, y).
    template <class F>
    void assign(F&& f) {
        const int n = grid_.n();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                (*this)(i, j) = f(grid_.x(i), grid_.x(j));
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
    }
    double min_value() const {
        double m = values_.empty() ? 0.0 : values_[0];
        for (double v : values_) m = std::min(m, v);
        return m;
    }
    double max_value() const {
        double m = values_.empty() ? 0.0 : values_[0];
        for (double v : values_) m = std::max(m, v);
        return m;
    }
    /// Grid mean (equals the zero-frequency Fourier coefficient).
    double mean() const {
        double s = 0.0;
        for (double v : values_) s += v;
        return s / static_cast<double>(values_.size());
    }
    bool all_finite() const {
        for (double v : values_)
            if (!std::isfinite(v)) return false;
        return true;
    }

private:
    Grid grid_;
    RealBuffer values_;
};

/// Fourier coefficients of a real field in the conjugate-symmetric (r2c)
/// half-plane layout: n rows of full signed frequency along axis 0 and
/// n/2+1 columns of non-negative frequency along axis 1.  Coefficients are
/// normalized as series coefficients, f(x) = sum_k c_k exp(i k.x).
class SpectralField {
public:
    explicit SpectralField(const Grid& grid)
        : grid_(grid), coeffs_(static_cast<std::size_t>(grid.spectral_size()), {0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }

    std::complex<double>& at(int i, int j) {
        return coeffs_[static_cast<std::size_t>(i) * grid_.spectral_cols() + j];
    }
    const std::complex<double>& at(int i, int j) const {
        return coeffs_[static_cast<std::size_t>(i) * grid_.spectral_cols() + j];
    }

    ComplexBuffer& coeffs() { return coeffs_; }
    const ComplexBuffer& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Logical coefficient for any signed integer frequency pair, using
    /// conjugate symmetry for the half-plane that is not stored.
    std::complex<double> coefficient(int m1, int m2) const {
        const int n = grid_.n();
        const int half = n / 2;
        if (m1 < -half || m1 > half || m2 < -half || m2 > half)
            throw std::out_of_range("SpectralField::coefficient: frequency outside grid band");
        if (m2 >= 0) {
            return at(index_of(m1), m2);
        }
        // c(m1, m2) = conj(c(-m1, -m2))
        return std::conj(at(index_of(-m1), -m2));
    }

    /// Row index storing signed axis-0 frequency m.
    int index_of(int m) const { return m >= 0 ? m : m + grid_.n(); }

    bool all_finite() const {
        for (const auto& c : coeffs_)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }

    /// Mean value of the underlying real field.
    double mean() const { return at(0, 0).real(); }
    void zero_mean() { at(0, 0) = {0.0, 0.0}; }

private:
    Grid grid_;
    ComplexBuffer coeffs_;
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

} // namespace kse
