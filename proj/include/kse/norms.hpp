#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kse/field.hpp"

namespace kse {

constexpr double q_infinity = std::numeric_limits<double>::infinity();

/// L^q norm by grid quadrature: (dx^2 sum |f|^q)^{1/q}; q = infinity gives
/// the grid maximum of |f|.
inline double lq_norm(const ScalarField& f, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm: q must be in [1, infinity]");
    if (std::isinf(q)) return f.max_abs();
    const double w = f.grid().cell_area();
    double s = 0.0;
    if (q == 1.0) {
        for (double v : f.values()) s += std::abs(v);
        return w * s;
    }
    if (q == 2.0) {
        for (double v : f.values()) s += v * v;
        return std::sqrt(w * s);
    }
    for (double v : f.values()) s += std::pow(std::abs(v), q);
    return std::pow(w * s, 1.0 / q);
}

/// L^q norm of the magnitude of a two-component field.
inline double lq_norm(const ScalarField& f1, const ScalarField& f2, double q) {
    require_same_grid(f1.grid(), f2.grid(), "lq_norm");
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm: q must be in [1, infinity]");
    const auto& a = f1.values();
    const auto& b = f2.values();
    if (std::isinf(q)) {
        double m = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            m = std::max(m, a[i] * a[i] + b[i] * b[i]);
        return std::sqrt(m);
    }
    const double w = f1.grid().cell_area();
    double s = 0.0;
    if (q == 2.0) {
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * a[i] + b[i] * b[i];
        return std::sqrt(w * s);
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::pow(a[i] * a[i] + b[i] * b[i], 0.5 * q);
    return std::pow(w * s, 1.0 / q);
}

namespace detail {

/// Sum over the logical full plane of weight(k1, k2) * |c_k|^2 from the
/// conjugate-symmetric half-plane storage.
template <class Weight>
double spectral_sum(const SpectralField& F, Weight&& weight) {
    const Grid& g = F.grid();
    const int n = g.n();
    const int cols = g.spectral_cols();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.wavenumber_of(j);
            const double m = std::norm(F.at(i, j));
            const double mult = (j == 0 || 2 * j == n) ? 1.0 : 2.0;
            s += mult * weight(k1, k2) * m;
        }
    }
    return s;
}

} // namespace detail

/// L^2 norm evaluated from coefficients (Parseval).
inline double l2_norm(const SpectralField& F) {
    const double L = F.grid().length();
    return std::sqrt(L * L * detail::spectral_sum(F, [](double, double) { return 1.0; }));
}

/// Sobolev H^s norm via the multiplier (1 + |k|^2)^s on squared coefficients.
inline double sobolev_norm(const SpectralField& F, int s) {
    if (s < 0) throw std::invalid_argument("sobolev_norm: s must be >= 0");
    const double L = F.grid().length();
    const double sum = detail::spectral_sum(F, [s](double k1, double k2) {
        return std::pow(1.0 + k1 * k1 + k2 * k2, static_cast<double>(s));
    });
    return std::sqrt(L * L * sum);
}

/// Squared L^2 norm of the gradient, computed spectrally.
inline double l2_gradient_sq(const SpectralField& F) {
    const double L = F.grid().length();
    return L * L * detail::spectral_sum(F, [](double k1, double k2) { return k1 * k1 + k2 * k2; });
}

/// Grid quadrature of the pointwise product (L^2 inner product).
inline double inner_product(const ScalarField& f, const ScalarField& g) {
    require_same_grid(f.grid(), g.grid(), "inner_product");
    double s = 0.0;
    const auto& a = f.values();
    const auto& b = g.values();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return f.grid().cell_area() * s;
}

/// Integral of f over the torus.
inline double integral(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.values()) s += v;
    return f.grid().cell_area() * s;
}

inline double max_log_plus(double x) { return std::max(std::log(x), 0.0); }

} // namespace kse
