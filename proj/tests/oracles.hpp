#ifndef CBARG_TEST_ORACLES_HPP
#define CBARG_TEST_ORACLES_HPP

// Test-only reference implementations. Everything here is deliberately
// independent of the library code paths it is used to check: extended
// precision where it helps, brute-force summation, adaptive quadrature.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace oracles {

using LCplx = std::complex<long double>;

/// Terminating 2F1(-n, b; c; x) as a plain forward sum in long double.
inline LCplx hyp2f1_ld(int n, long double b, long double c, LCplx x) {
    LCplx sum{1.0L, 0.0L};
    LCplx term{1.0L, 0.0L};
    for (int k = 0; k < n; ++k) {
        term *= (static_cast<long double>(-n + k) * (b + k)) / ((c + k) * (k + 1.0L)) * x;
        sum += term;
    }
    return sum;
}

inline long double pochhammer_ld(long double a, int n) {
    long double p = 1.0L;
    for (int k = 0; k < n; ++k)
        p *= a + k;
    return p;
}

inline long double binomial_ld(long double a, int k) {
    long double kfact = 1.0L;
    for (int j = 2; j <= k; ++j)
        kfact *= j;
    return pochhammer_ld(a - k + 1.0L, k) / kfact;
}

/// Adaptive Simpson quadrature for complex integrands on [a, b].
/// Plain recursive bisection; no reuse of the library quadrature code.
inline std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f,
                                             double a, double b, double tol, int depth = 60) {
    auto simpson = [&](double lo, double hi) {
        const double mid = 0.5 * (lo + hi);
        return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi));
    };
    std::function<std::complex<double>(double, double, std::complex<double>, double, int)> rec =
        [&](double lo, double hi, std::complex<double> whole, double eps,
            int level) -> std::complex<double> {
        const double mid = 0.5 * (lo + hi);
        const std::complex<double> left = simpson(lo, mid);
        const std::complex<double> right = simpson(mid, hi);
        const std::complex<double> delta = left + right - whole;
        if (level <= 0 || std::abs(delta) <= 15.0 * eps)
            return left + right + delta / 15.0;
        return rec(lo, mid, left, eps / 2.0, level - 1) +
               rec(mid, hi, right, eps / 2.0, level - 1);
    };
    return rec(a, b, simpson(a, b), tol, depth);
}

} // namespace oracles

#endif // CBARG_TEST_ORACLES_HPP
