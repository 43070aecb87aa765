#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "kse/fft.hpp"
#include "kse/field.hpp"

namespace kse {

/// Spectral derivative along an axis (order 1 or 2): multiplication by
/// (i k_axis)^order.  First-derivative coefficients at the Nyquist
/// frequency are zeroed; an odd multiplier there would break the conjugate
/// symmetry of a real field.
inline SpectralField derivative(const SpectralField& F, int axis, int order = 1) {
    if (axis != 0 && axis != 1)
        throw std::invalid_argument("derivative: axis must be 0 or 1");
    if (order != 1 && order != 2)
        throw std::invalid_argument("derivative: order must be 1 or 2");

    const Grid& g = F.grid();
    const int n = g.n();
    const int cols = g.spectral_cols();
    SpectralField out(g);

    for (int i = 0; i < n; ++i) {
        const int m1 = g.freq(i);
        for (int j = 0; j < cols; ++j) {
            const int m = axis == 0 ? m1 : j;
            const double k = g.wavenumber_of(m);
            const std::complex<double>& c = F.at(i, j);
            if (order == 1) {
                if (2 * std::abs(m) == n) {
                    out.at(i, j) = {0.0, 0.0};
                } else {
                    out.at(i, j) = std::complex<double>(-k * c.imag(), k * c.real());
                }
            } else {
                out.at(i, j) = -k * k * c;
            }
        }
    }
    return out;
}

/// Laplacian: multiplication by -|k|^2.
inline SpectralField laplacian(const SpectralField& F) {
    const Grid& g = F.grid();
    const int n = g.n();
    const int cols = g.spectral_cols();
    SpectralField out(g);
    for (int i = 0; i < n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.wavenumber_of(j);
            out.at(i, j) = -(k1 * k1 + k2 * k2) * F.at(i, j);
        }
    }
    return out;
}

/// Zero-mean inverse Laplacian: divide by -|k|^2, zero frequency mapped to 0.
inline SpectralField inverse_laplacian(const SpectralField& F) {
    const Grid& g = F.grid();
    const int n = g.n();
    const int cols = g.spectral_cols();
    SpectralField out(g);
    for (int i = 0; i < n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.wavenumber_of(j);
            const double k2sum = k1 * k1 + k2 * k2;
            out.at(i, j) = k2sum > 0.0 ? F.at(i, j) / (-k2sum) : std::complex<double>(0.0, 0.0);
        }
    }
    return out;
}

/// 2/3-rule truncation: zero every coefficient with max(|m1|, |m2|) > n/3.
/// Quadratic products of fields kept in this band are then alias-free.
inline SpectralField dealias(const SpectralField& F) {
    const Grid& g = F.grid();
    const int n = g.n();
    const int cols = g.spectral_cols();
    SpectralField out = F;
    for (int i = 0; i < n; ++i) {
        const int m1 = std::abs(g.freq(i));
        for (int j = 0; j < cols; ++j) {
            if (3 * std::max(m1, j) > n) out.at(i, j) = {0.0, 0.0};
        }
    }
    return out;
}

/// Maximum retained integer frequency under the 2/3 rule.
inline int dealias_band(const Grid& g) { return g.n() / 3; }

/// Discrete heat semigroup e^{nu t Laplacian}: per-mode decay exp(-nu |k|^2 t).
inline SpectralField heat_propagate(const SpectralField& F, double nu, double t) {
    if (nu < 0.0 || t < 0.0)
        throw std::invalid_argument("heat_propagate: nu and t must be non-negative");
    const Grid& g = F.grid();
    if (nu == 0.0 || t == 0.0) return F;
    const int n = g.n();
    const int cols = g.spectral_cols();
    SpectralField out(g);
    for (int i = 0; i < n; ++i) {
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.wavenumber_of(j);
            out.at(i, j) = std::exp(-nu * (k1 * k1 + k2 * k2) * t) * F.at(i, j);
        }
    }
    return out;
}

/// Velocity from vorticity on the torus: u = grad^perp (Laplacian^{-1} omega),
/// so that d1 u2 - d2 u1 = omega and div u = 0, with zero spatial mean.
/// The mean coefficient of omega is ignored (zeroed); Nyquist modes are
/// dropped as in first derivatives.
inline std::pair<SpectralField, SpectralField> biot_savart(const SpectralField& omega_hat) {
    const Grid& g = omega_hat.grid();
    const int n = g.n();
    const int cols = g.spectral_cols();
    SpectralField u1(g), u2(g);
    for (int i = 0; i < n; ++i) {
        const int m1 = g.freq(i);
        const double k1 = g.wavenumber(i);
        for (int j = 0; j < cols; ++j) {
            const double k2 = g.wavenumber_of(j);
            const double ksq = k1 * k1 + k2 * k2;
            if (ksq == 0.0 || 2 * std::abs(m1) == n || 2 * j == n) continue;
            const std::complex<double> psi = omega_hat.at(i, j) / (-ksq);
            // u1 = -d2 psi, u2 = d1 psi
            u1.at(i, j) = std::complex<double>(k2 * psi.imag(), -k2 * psi.real());
            u2.at(i, j) = std::complex<double>(-k1 * psi.imag(), k1 * psi.real());
        }
    }
    return {std::move(u1), std::move(u2)};
}

} // namespace kse
