#ifndef CBARG_SPECFUN_HPP
#define CBARG_SPECFUN_HPP

// Scalar special functions: log-gamma, Pochhammer symbols, generalized
// binomials, terminating Gauss hypergeometric sums and Jacobi polynomials
// at complex argument. Parameters may be negative integers; vanishing
// factors are produced exactly (a zero term, never a division blow-up).

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cbarg {

using Cplx = std::complex<double>;

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: requires x > 0");
    return std::lgamma(x);
}

/// Rising factorial a (a+1) ... (a+n-1); empty product = 1.
/// Exact zero when a is a non-positive integer reached within the range.
inline double pochhammer(double a, int n) {
    if (n < 0)
        throw std::domain_error("pochhammer: requires n >= 0");
    // a in {0, -1, ..., -(n-1)}: some factor is exactly zero; return it
    // before the partial products can overflow
    if (a <= 0.0 && a > -static_cast<double>(n) && a == std::floor(a))
        return 0.0;
    double p = 1.0;
    for (int k = 0; k < n; ++k)
        p *= a + k;
    return p;
}

/// Integer power of a complex number by repeated squaring, e >= 0.
inline Cplx ipow(Cplx base, int e) {
    Cplx r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Generalized binomial coefficient C(a, k) for real a and integer k >= 0,
/// defined through pochhammer(a-k+1, k) / k! so that negative-integer a
/// with k > a yields an exact 0.
inline double binomial_real(double a, int k) {
    if (k < 0)
        throw std::domain_error("binomial_real: requires k >= 0");
    if (k == 0) return 1.0;
    // Large k with both gamma arguments positive: evaluate in log space,
    // the direct product would overflow long before the quotient does.
    if (k > 24 && a - k + 1.0 > 0.0) {
        return std::exp(std::lgamma(a + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                        std::lgamma(a - k + 1.0));
    }
    double num = pochhammer(a - k + 1.0, k);
    double kfact = 1.0;
    for (int j = 2; j <= k; ++j)
        kfact *= j;
    return num / kfact;
}

/// Terminating hypergeometric sum
///   2F1(-n, b; c; x) = sum_{k=0..n} (-n)_k (b)_k / ((c)_k k!) x^k,
/// summed forward with a running term product.
inline Cplx hyp2f1_terminating(int n, double b, double c, Cplx x) {
    if (n < 0)
        throw std::domain_error("hyp2f1_terminating: requires n >= 0");
    for (int k = 0; k < n; ++k) {
        if (c + k == 0.0)
            throw std::invalid_argument(
                "hyp2f1_terminating: c is a non-positive integer reached before termination");
    }
    Cplx sum{1.0, 0.0};
    Cplx term{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        term *= (static_cast<double>(-n + k) * (b + k)) / ((c + k) * (k + 1.0)) * x;
        sum += term;
    }
    return sum;
}

/// Jacobi polynomial P_n^(alpha,beta)(x) at complex x through the finite
/// double-binomial sum
///   sum_k C(n+alpha, n-k) C(n+beta, k) ((x-1)/2)^k ((x+1)/2)^(n-k).
/// No three-term recurrence: the callers use degree-dependent parameters
/// (alpha = m - n), for which individual sum terms vanish exactly.
inline Cplx jacobi_p(int n, double alpha, double beta, Cplx x) {
    if (n < 0)
        throw std::domain_error("jacobi_p: requires n >= 0");
    const Cplx a_half = 0.5 * (x - 1.0);
    const Cplx b_half = 0.5 * (x + 1.0);
    Cplx sum{0.0, 0.0};
    for (int k = 0; k <= n; ++k) {
        const double c1 = binomial_real(n + alpha, n - k);
        if (c1 == 0.0) continue;
        const double c2 = binomial_real(n + beta, k);
        if (c2 == 0.0) continue;
        sum += (c1 * c2) * ipow(a_half, k) * ipow(b_half, n - k);
    }
    return sum;
}

} // namespace cbarg

#endif // CBARG_SPECFUN_HPP
