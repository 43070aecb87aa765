#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

#include "kse/field.hpp"
#include "kse/grid.hpp"

namespace kse {

namespace detail {

/// Process-wide FFTW plan cache, one r2c/c2r plan pair per grid size.
/// Plans are created with FFTW_ESTIMATE: the planner choice is then a
/// deterministic function of the problem size, which keeps runs with an
/// identical configuration bit-identical (FFTW_MEASURE plans depend on
/// machine timing).  Plan creation is serialized; execution through the
/// new-array interface is thread-safe.
class FftPlans {
public:
    static FftPlans& instance() {
        static FftPlans plans;
        return plans;
    }

    static void set_threads(int nthreads) {
#ifdef KSE_HAVE_FFTW_THREADS
        std::lock_guard<std::mutex> lock(instance().mutex_);
        static bool initialized = false;
        if (!initialized) {
            fftw_init_threads();
            initialized = true;
        }
        fftw_plan_with_nthreads(nthreads > 0 ? nthreads : 1);
        // Cached plans were built for the previous thread count.
        instance().clear_locked();
#else
        (void)nthreads;
#endif
    }

    struct PlanPair {
        fftw_plan r2c = nullptr;
        fftw_plan c2r = nullptr;
    };

    PlanPair get(int n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;

        RealBuffer real(static_cast<std::size_t>(n) * n);
        ComplexBuffer cplx(static_cast<std::size_t>(n) * (n / 2 + 1));
        PlanPair p;
        p.r2c = fftw_plan_dft_r2c_2d(n, n, real.data(),
                                     reinterpret_cast<fftw_complex*>(cplx.data()),
                                     FFTW_ESTIMATE);
        p.c2r = fftw_plan_dft_c2r_2d(n, n, reinterpret_cast<fftw_complex*>(cplx.data()),
                                     real.data(), FFTW_ESTIMATE);
        if (!p.r2c || !p.c2r)
            throw std::runtime_error("FftPlans: planner failed for n = " + std::to_string(n));
        cache_[n] = p;
        return p;
    }

private:
    FftPlans() = default;
    ~FftPlans() { clear_locked(); }
    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;

    void clear_locked() {
        for (auto& [n, p] : cache_) {
            if (p.r2c) fftw_destroy_plan(p.r2c);
            if (p.c2r) fftw_destroy_plan(p.c2r);
        }
        cache_.clear();
    }

    std::mutex mutex_;
    std::map<int, PlanPair> cache_;
};

} // namespace detail

/// Configure the number of FFTW worker threads (0 or 1 = serial).
inline void set_fft_threads(int nthreads) { detail::FftPlans::set_threads(nthreads); }

/// Forward transform to series coefficients (f = sum c_k e^{ik.x}).
/// Rejects non-finite samples.
inline SpectralField forward_transform(const ScalarField& f) {
    if (!f.all_finite())
        throw std::domain_error("forward_transform: input field contains non-finite values");
    const Grid& g = f.grid();
    auto plans = detail::FftPlans::instance().get(g.n());

    SpectralField out(g);
    // r2c preserves its input for out-of-place 2D transforms, but FFTW's
    // new-array execute takes a non-const pointer.
    fftw_execute_dft_r2c(plans.r2c, const_cast<double*>(f.data()),
                         reinterpret_cast<fftw_complex*>(out.coeffs().data()));
    const double scale = 1.0 / static_cast<double>(g.size());
    for (auto& c : out.coeffs()) c *= scale;
    return out;
}

/// Inverse transform back to real samples.
inline ScalarField inverse_transform(const SpectralField& F) {
    if (!F.all_finite())
        throw std::domain_error("inverse_transform: input coefficients contain non-finite values");
    const Grid& g = F.grid();
    auto plans = detail::FftPlans::instance().get(g.n());

    // Multi-dimensional c2r destroys its input, so run from a scratch copy.
    thread_local ComplexBuffer scratch;
    scratch.assign(F.coeffs().begin(), F.coeffs().end());

    ScalarField out(g);
    fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
    return out;
}

} // namespace kse
