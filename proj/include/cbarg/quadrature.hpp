#ifndef CBARG_QUADRATURE_HPP
#define CBARG_QUADRATURE_HPP

// Quadrature rules for the two measures of the model: the probability
// measure c_gamma sin^gamma(theta/2) dtheta / (2 pi) on (0, 2 pi) and
// (1 - |z|^2)^(gamma-1) dmu on the unit disk. Circle integrals use a
// tanh-sinh (double exponential) rule, which absorbs the algebraic
// endpoint weight uniformly in gamma; disk integrals use a tensor rule,
// Gauss-Jacobi in s = |z|^2 times uniform angles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "specfun.hpp"

namespace cbarg {

using CircleFunction = std::function<Cplx(double)>;
using DiskFunction = std::function<Cplx(Cplx)>;

struct CircleRule {
    double gamma = 0.0;
    int level = 0;
    std::vector<double> nodes;   // angles in (0, 2 pi)
    std::vector<double> weights; // strictly positive, density included
};

struct DiskRule {
    double gamma = 0.0;
    int m = 0; // Landau index the radial rule is adapted to (0 = plain Bergman)
    std::vector<Cplx> nodes;     // points inside the open disk
    std::vector<double> weights; // strictly positive, density and area element included
};

/// Density of the circle measure with respect to dtheta:
///   2^gamma Gamma^2(gamma/2 + 1) / Gamma(gamma + 1) * sin^gamma(theta/2) / (2 pi).
inline double sigma_density(double gamma, double theta) {
    if (!(gamma > 0.0))
        throw std::domain_error("sigma_density: requires gamma > 0");
    if (theta < 0.0 || theta > 2.0 * std::numbers::pi)
        throw std::domain_error("sigma_density: theta outside [0, 2 pi]");
    const double log_const = gamma * std::numbers::ln2 + 2.0 * log_gamma(0.5 * gamma + 1.0) -
                             log_gamma(gamma + 1.0) - std::log(2.0 * std::numbers::pi);
    // sin(theta/2) = sin(d/2) with d the distance to the nearest endpoint;
    // evaluating through d keeps the right endpoint exact.
    const double d = std::min(theta, 2.0 * std::numbers::pi - theta);
    const double s = std::sin(0.5 * d);
    if (s <= 0.0) return 0.0;
    return std::exp(log_const + gamma * std::log(s));
}

namespace detail {

// Tanh-sinh nodes/weights on the segment (a, b) of (0, 2 pi), density
// included. Endpoint distances are formed without cancellation so the
// sin^gamma weight stays accurate however close nodes fall to 0 or 2 pi;
// nodes whose double representation touches the circle endpoints are
// dropped (their weights are below 1e-20 of the total).
inline void circle_segment(double gamma, int level, double a, double b,
                           std::vector<double>& nodes, std::vector<double>& weights) {
    const double pi = std::numbers::pi;
    const double log_const = gamma * std::numbers::ln2 + 2.0 * log_gamma(0.5 * gamma + 1.0) -
                             log_gamma(gamma + 1.0) - std::log(2.0 * pi);

    // theta(t) = midpoint + halfwidth tanh((pi/2) sinh t); |t| <= t_max
    // covers the segment to far below double precision
    const double t_max = 4.0;
    const int half = 1 << level;
    const double h = t_max / half;
    const double hw = 0.5 * (b - a);

    for (int j = -half; j <= half; ++j) {
        const double t = j * h;
        const double s = 0.5 * pi * std::sinh(t);
        const double d_lo = 2.0 * hw / (1.0 + std::exp(-2.0 * s)); // = theta - a
        const double d_hi = 2.0 * hw / (1.0 + std::exp(2.0 * s));  // = b - theta
        if (!(d_lo > 0.0) || !(d_hi > 0.0)) continue;
        const double theta = a + d_lo;
        if (!(theta > 0.0) || !(theta < 2.0 * pi)) continue;
        // sin(theta/2) = sin(d/2) with d the distance to the nearer circle
        // endpoint, exact when the segment endpoint is 0 or 2 pi
        const double dist0 = a + d_lo;
        const double dist1 = (2.0 * pi - b) + d_hi;
        const double sin_half = std::sin(0.5 * std::min(dist0, dist1));
        if (!(sin_half > 0.0)) continue;
        // theta'(t) = halfwidth (pi/2) cosh(t) sech^2(s)
        const double em = std::exp(-2.0 * std::abs(s));
        const double sech2 = 4.0 * em / ((1.0 + em) * (1.0 + em));
        const double log_w = std::log(h * 0.5 * pi * hw * std::cosh(t) * sech2) + log_const +
                             gamma * std::log(sin_half);
        const double w = std::exp(log_w);
        if (!(w > 0.0) || !std::isfinite(w)) continue;
        nodes.push_back(theta);
        weights.push_back(w);
    }
}

} // namespace detail

/// Tanh-sinh rule on (0, 2 pi) with the circle density folded into the
/// weights. Node count grows as 2^level; both endpoints stay strictly
/// excluded.
inline CircleRule build_circle_rule(double gamma, int level) {
    if (!(gamma > 0.0))
        throw std::domain_error("build_circle_rule: requires gamma > 0");
    if (level < 1)
        throw std::domain_error("build_circle_rule: requires level >= 1");
    CircleRule rule;
    rule.gamma = gamma;
    rule.level = level;
    detail::circle_segment(gamma, level, 0.0, 2.0 * std::numbers::pi, rule.nodes, rule.weights);
    return rule;
}

/// Circle rule split at an interior angle, one tanh-sinh segment on each
/// side. Endpoint clustering at the split resolves integrands that peak
/// there (the transform kernel at a label z peaks at theta = -arg z, with
/// width 1 - |z|; a single segment cannot resolve that near the rim).
inline CircleRule build_circle_rule_split(double gamma, int level, double split_at) {
    if (!(gamma > 0.0))
        throw std::domain_error("build_circle_rule_split: requires gamma > 0");
    if (level < 1)
        throw std::domain_error("build_circle_rule_split: requires level >= 1");
    if (!(split_at > 0.0) || !(split_at < 2.0 * std::numbers::pi))
        throw std::domain_error("build_circle_rule_split: split angle must be interior");
    CircleRule rule;
    rule.gamma = gamma;
    rule.level = level;
    detail::circle_segment(gamma, level, 0.0, split_at, rule.nodes, rule.weights);
    detail::circle_segment(gamma, level, split_at, 2.0 * std::numbers::pi, rule.nodes,
                           rule.weights);
    return rule;
}

/// Circle rule adapted to integrands carrying the kernel factor
/// (1 - z e^{i theta})^p of a fixed label z: splits at the angle of the
/// kernel's nearest approach. Falls back to the plain rule when the peak
/// sits at the circle endpoint or the label is central.
inline CircleRule build_circle_rule_for_label(double gamma, int level, Cplx z) {
    const double pi = std::numbers::pi;
    if (std::abs(z) < 1e-12) return build_circle_rule(gamma, level);
    double peak = -std::arg(z);
    if (peak < 0.0) peak += 2.0 * pi;
    if (peak < 1e-9 || peak > 2.0 * pi - 1e-9) return build_circle_rule(gamma, level);
    return build_circle_rule_split(gamma, level, peak);
}

namespace detail {

// Implicit QL with shifts on a symmetric tridiagonal matrix, rotations
// accumulated on a seed vector (Elhay-Kautsky / EISPACK lineage). On
// return diag holds ascending eigenvalues and seed the first components
// of the normalized eigenvectors scaled by the input seed.
inline void tridiag_eigen_firstrow(std::vector<double>& diag, std::vector<double>& sub,
                                   std::vector<double>& seed) {
    const int n = static_cast<int>(diag.size());
    if (n == 1) return;
    const double prec = 2.220446049250313e-16;
    sub[n - 1] = 0.0;

    for (int l = 1; l <= n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            for (; m <= n; ++m) {
                if (m == n) break;
                if (std::abs(sub[m - 1]) <= prec * (std::abs(diag[m - 1]) + std::abs(diag[m])))
                    break;
            }
            double p = diag[l - 1];
            if (m == l) break;
            if (++iter > 30)
                throw std::runtime_error("tridiag_eigen_firstrow: iteration limit exceeded");
            double g = (diag[l] - p) / (2.0 * sub[l - 1]);
            double r = std::hypot(g, 1.0);
            g = diag[m - 1] - p + sub[l - 1] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0;
            p = 0.0;
            for (int ii = 1; ii <= m - l; ++ii) {
                const int i = m - ii;
                double f = s * sub[i - 1];
                const double b = c * sub[i - 1];
                if (std::abs(g) <= std::abs(f)) {
                    c = g / f;
                    r = std::hypot(c, 1.0);
                    sub[i] = f * r;
                    s = 1.0 / r;
                    c = c * s;
                } else {
                    s = f / g;
                    r = std::hypot(s, 1.0);
                    sub[i] = g * r;
                    c = 1.0 / r;
                    s = s * c;
                }
                g = diag[i] - p;
                r = (diag[i - 1] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i] = g + p;
                g = c * r - b;
                f = seed[i];
                seed[i] = s * seed[i - 1] + c * f;
                seed[i - 1] = c * seed[i - 1] - s * f;
            }
            diag[l - 1] -= p;
            sub[l - 1] = g;
            sub[m - 1] = 0.0;
        }
    }
    // selection sort ascending, permuting the seed alongside
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        for (int j = i + 1; j < n; ++j)
            if (diag[j] < diag[k]) k = j;
        if (k != i) {
            std::swap(diag[i], diag[k]);
            std::swap(seed[i], seed[k]);
        }
    }
}

// Gauss-Jacobi nodes/weights on (0,1) for the weight (1-s)^a, a > -1,
// by Golub-Welsch on the standard-interval recurrence matrix.
inline void gauss_jacobi_01(int n, double a, std::vector<double>& s_nodes,
                            std::vector<double>& s_weights) {
    if (n < 1)
        throw std::domain_error("gauss_jacobi_01: requires n >= 1");
    if (!(a > -1.0))
        throw std::domain_error("gauss_jacobi_01: requires a > -1");

    const double ab = a; // second exponent is zero
    std::vector<double> diag(n), sub(n, 0.0), seed(n, 0.0);
    seed[0] = 1.0;
    diag[0] = -a / (ab + 2.0);
    for (int k = 1; k < n; ++k)
        diag[k] = -(a * a) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
    if (n > 1) {
        const double beta1 = 4.0 * (a + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        sub[0] = std::sqrt(beta1);
    }
    for (int k = 2; k < n; ++k) {
        const double t = 2.0 * k + ab;
        const double betak = 4.0 * k * (k + a) * k * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
        sub[k - 1] = std::sqrt(betak);
    }
    tridiag_eigen_firstrow(diag, sub, seed);

    const double mu0 = std::exp((ab + 1.0) * std::numbers::ln2 + log_gamma(a + 1.0) -
                                log_gamma(ab + 2.0)); // total mass on (-1,1)
    const double to01 = std::exp2(-(a + 1.0));
    s_nodes.resize(n);
    s_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        s_nodes[i] = 0.5 * (1.0 + diag[i]);
        s_weights[i] = mu0 * seed[i] * seed[i] * to01;
    }
}

} // namespace detail

/// Tensor rule for the disk measure (1 - |z|^2)^(gamma-1) dmu in polar
/// form z = sqrt(s) e^{i alpha}. The radial Gauss-Jacobi rule is built
/// for the exponent gamma - 2m - 1 with the polynomial factor (1-s)^{2m}
/// moved into the weights, so every integrand of the m-th eigenspace
/// (which carries (1-|z|^2)^{-2m} against the density) is integrated
/// exactly; at m = 0 this is the plain Bergman-weight rule.
inline DiskRule build_disk_rule(double gamma, int m, int n_radial, int n_angular) {
    if (!(gamma > 0.0))
        throw std::domain_error("build_disk_rule: requires gamma > 0");
    if (m < 0 || !(gamma - 2.0 * m > 0.0))
        throw std::domain_error("build_disk_rule: requires 0 <= m and gamma - 2m > 0");
    if (n_radial < 1 || n_angular < 1)
        throw std::domain_error("build_disk_rule: requires n_radial, n_angular >= 1");

    std::vector<double> s_nodes, s_weights;
    detail::gauss_jacobi_01(n_radial, gamma - 2.0 * m - 1.0, s_nodes, s_weights);

    DiskRule rule;
    rule.gamma = gamma;
    rule.m = m;
    rule.nodes.reserve(static_cast<size_t>(n_radial) * n_angular);
    rule.weights.reserve(static_cast<size_t>(n_radial) * n_angular);
    const double ang_w = std::numbers::pi / n_angular; // (2 pi / n) * (1/2 ds dalpha)
    for (int i = 0; i < n_radial; ++i) {
        const double r = std::sqrt(s_nodes[i]);
        const double poly = std::pow(1.0 - s_nodes[i], 2.0 * m);
        for (int j = 0; j < n_angular; ++j) {
            const double alpha = 2.0 * std::numbers::pi * j / n_angular;
            rule.nodes.emplace_back(r * std::cos(alpha), r * std::sin(alpha));
            rule.weights.push_back(s_weights[i] * poly * ang_w);
        }
    }
    return rule;
}

/// Plain Bergman-weight disk rule (m = 0).
inline DiskRule build_disk_rule(double gamma, int n_radial, int n_angular) {
    return build_disk_rule(gamma, 0, n_radial, n_angular);
}

/// Weighted sum  sum_k w_k conj(f(node_k)) g(node_k); conjugate linear
/// in the first slot. Summation order is the fixed node order.
inline Cplx inner_product(const CircleRule& rule, const CircleFunction& f,
                          const CircleFunction& g) {
    Cplx acc{0.0, 0.0};
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        acc += rule.weights[k] * std::conj(f(rule.nodes[k])) * g(rule.nodes[k]);
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw std::runtime_error("inner_product: non-finite accumulation");
    return acc;
}

inline Cplx inner_product(const DiskRule& rule, const DiskFunction& f, const DiskFunction& g) {
    Cplx acc{0.0, 0.0};
    for (size_t k = 0; k < rule.nodes.size(); ++k)
        acc += rule.weights[k] * std::conj(f(rule.nodes[k])) * g(rule.nodes[k]);
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw std::runtime_error("inner_product: non-finite accumulation");
    return acc;
}

template <class Rule, class Fn>
inline double norm_sq(const Rule& rule, const Fn& f) {
    return inner_product(rule, f, f).real();
}

} // namespace cbarg

#endif // CBARG_QUADRATURE_HPP
