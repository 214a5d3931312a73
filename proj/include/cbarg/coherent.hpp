#ifndef CBARG_COHERENT_HPP
#define CBARG_COHERENT_HPP

// Coherent states labeled by disk points: reproducing-kernel diagonal,
// closed-form wave functions on the circle, and the defining basis
// series with adaptive truncation. The agreement of the two routes is
// what the verification suite certifies.

#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "bases.hpp"
#include "specfun.hpp"

namespace cbarg {

/// Diagonal of the reproducing kernel, (gamma - 2m)/pi (1 - |z|^2)^(-1-gamma).
inline double kernel_diag(const ModelParams& params, Cplx z) {
    params.validate();
    const double r2 = std::norm(z);
    if (!(r2 < 1.0))
        throw std::domain_error("kernel_diag: requires |z| < 1");
    return params.gamma_prime() / std::numbers::pi *
           std::pow(1.0 - r2, -1.0 - params.gamma);
}

/// Closed-form coherent state wave function at the lowest level,
///   (1-|z|^2)^((1+gamma)/2) (1-z)^(-gamma/2) (1-z e^{i theta})^(-1-gamma/2),
/// principal branch throughout (both bases have positive real part on the disk).
inline Cplx cs_closed(double gamma, Cplx z, double theta) {
    if (!(gamma > 0.0))
        throw std::domain_error("cs_closed: requires gamma > 0");
    const double r2 = std::norm(z);
    if (!(r2 < 1.0))
        throw std::domain_error("cs_closed: requires |z| < 1");
    const Cplx one_minus_z = 1.0 - z;
    const Cplx one_minus_zw = 1.0 - z * std::exp(Cplx{0.0, theta});
    assert(std::abs(std::arg(one_minus_z)) < std::numbers::pi - 1e-9);
    assert(std::abs(std::arg(one_minus_zw)) < std::numbers::pi - 1e-9);
    return std::pow(1.0 - r2, 0.5 * (1.0 + gamma)) * std::pow(one_minus_z, -0.5 * gamma) *
           std::pow(one_minus_zw, -1.0 - 0.5 * gamma);
}

/// Closed-form coherent state at Landau index m:
///   sqrt(Gamma(gamma-m+1)/(m! Gamma(gamma-2m+1)))
///   (1-|z|^2)^((gamma+1)/2) (1-z)^(-gamma/2) (1-z e^{i theta})^(-gamma/2-1)
///   ((conj(z)-1)(1-z e^{i theta})/(1-|z|^2))^m
///   2F1(-m, gamma/2-m+1; 1+gamma-2m; (1-|z|^2)(1-e^{i theta})/((1-conj(z))(1-z e^{i theta}))).
/// The hypergeometric argument is formed in this final grouping only; the
/// singular-at-zero intermediate (|z|^2-1)/|z|^2 of the derivation never
/// appears, so z = 0 needs no special path.
inline Cplx cs_closed_m(const ModelParams& params, Cplx z, double theta) {
    params.validate();
    const double r2 = std::norm(z);
    if (!(r2 < 1.0))
        throw std::domain_error("cs_closed_m: requires |z| < 1");

    const double gamma = params.gamma;
    const int m = params.m;
    const Cplx w = std::exp(Cplx{0.0, theta});
    const Cplx zb = std::conj(z);
    const Cplx one_minus_z = 1.0 - z;
    const Cplx one_minus_zw = 1.0 - z * w;
    assert(std::abs(std::arg(one_minus_z)) < std::numbers::pi - 1e-9);
    assert(std::abs(std::arg(one_minus_zw)) < std::numbers::pi - 1e-9);

    const double prefactor = std::exp(
        0.5 * (log_gamma(gamma - m + 1.0) - log_gamma(m + 1.0) - log_gamma(gamma - 2.0 * m + 1.0)));
    const Cplx envelope = std::pow(1.0 - r2, 0.5 * (gamma + 1.0)) *
                          std::pow(one_minus_z, -0.5 * gamma) *
                          std::pow(one_minus_zw, -0.5 * gamma - 1.0);
    const Cplx ratio_pow = ipow((zb - 1.0) * one_minus_zw / (1.0 - r2), m);
    const Cplx hyp_arg = (1.0 - r2) * (1.0 - w) / ((1.0 - zb) * one_minus_zw);
    const Cplx hyp = hyp2f1_terminating(m, 0.5 * gamma - m + 1.0, 1.0 + gamma - 2.0 * m, hyp_arg);
    return prefactor * envelope * ratio_pow * hyp;
}

struct SeriesResult {
    Cplx value{0.0, 0.0};
    int terms_used = 0; // terms before the converged tail streak
};

/// Basis-series route to the coherent state wave function,
///   K(z,z)^(-1/2) sum_n Phi_n(z) ket_n(theta),
/// truncated once 5 consecutive terms fall below tol relative to the
/// partial sum. Throws if 4000 terms do not converge (|z| near 1).
inline SeriesResult cs_series(const ModelParams& params, Cplx z, double theta,
                              double tol = 1e-12) {
    params.validate();
    if (!(tol > 0.0))
        throw std::domain_error("cs_series: requires tol > 0");
    const double r2 = std::norm(z);
    if (!(r2 < 1.0))
        throw std::domain_error("cs_series: requires |z| < 1");

    constexpr int kMaxTerms = 4000;
    constexpr int kStreak = 5; // single terms can vanish accidentally
    const double pref = 1.0 / std::sqrt(kernel_diag(params, z));
    KetSequence kets(params.gamma_prime(), theta);

    Cplx sum{0.0, 0.0};
    int streak = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const Cplx phi = (params.m == 0) ? phi_bergman(n, params.gamma, z)
                                         : phi_eigen(n, params, z);
        const Cplx term = phi * kets.next_ket();
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) {
            if (++streak == kStreak)
                return {pref * sum, n + 1 - kStreak};
        } else {
            streak = 0;
        }
    }
    throw std::runtime_error("cs_series: no convergence within 4000 terms");
}

} // namespace cbarg

#endif // CBARG_COHERENT_HPP
