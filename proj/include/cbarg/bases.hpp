#ifndef CBARG_BASES_HPP
#define CBARG_BASES_HPP

// The three orthonormal families of the model: the Bergman basis on the
// disk, the eigenspace basis attached to a Landau index m, and the
// circular Jacobi kets on the circle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "specfun.hpp"

namespace cbarg {

/// Magnetic strength gamma and Landau index m. gamma - 2m > 0 is strict:
/// the boundary gamma = 2m is unsupported (the arrival-space measure and
/// the transform prefactor both degenerate there).
struct ModelParams {
    double gamma = 6.0;
    int m = 0;

    double gamma_prime() const { return gamma - 2.0 * m; }

    bool valid() const { return gamma > 0.0 && m >= 0 && gamma - 2.0 * m > 0.0; }

    void validate() const {
        if (!valid())
            throw std::domain_error(
                "ModelParams: requires gamma > 0, m >= 0 and gamma - 2m > 0");
    }
};

/// Bergman basis element  sqrt(gamma Gamma(gamma+1+n) / (pi Gamma(gamma+1) n!)) z^n.
inline Cplx phi_bergman(int n, double gamma, Cplx z) {
    if (n < 0)
        throw std::domain_error("phi_bergman: requires n >= 0");
    if (!(gamma > 0.0))
        throw std::domain_error("phi_bergman: requires gamma > 0");
    if (!(std::norm(z) < 1.0))
        throw std::domain_error("phi_bergman: requires |z| < 1");
    const double log_norm = 0.5 * (std::log(gamma / std::numbers::pi) + log_gamma(gamma + 1.0 + n) -
                                   log_gamma(gamma + 1.0) - log_gamma(n + 1.0));
    return std::exp(log_norm) * ipow(z, n);
}

namespace detail {

struct EigenNormKey {
    std::uint64_t gamma_bits;
    int n;
    int m;
    bool operator==(const EigenNormKey&) const = default;
};

struct EigenNormKeyHash {
    size_t operator()(const EigenNormKey& k) const {
        size_t h = std::hash<std::uint64_t>{}(k.gamma_bits);
        h ^= std::hash<int>{}(k.n) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<int>{}(k.m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

// Signed normalization (-1)^n sqrt((gamma-2m)/pi) sqrt(n! Gamma(gamma-m+1) /
// (m! Gamma(gamma-2m+n+1))), cached on the exact parameter bits.
inline double eigen_norm_constant(int n, const ModelParams& p) {
    static std::unordered_map<EigenNormKey, double, EigenNormKeyHash> cache;
    static std::shared_mutex cache_mutex;

    EigenNormKey key{};
    std::memcpy(&key.gamma_bits, &p.gamma, sizeof(double));
    key.n = n;
    key.m = p.m;

    {
        std::shared_lock lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const double gp = p.gamma_prime();
    const double log_mag = 0.5 * (std::log(gp / std::numbers::pi) + log_gamma(n + 1.0) +
                                  log_gamma(p.gamma - p.m + 1.0) - log_gamma(p.m + 1.0) -
                                  log_gamma(gp + n + 1.0));
    const double value = (n % 2 == 0 ? 1.0 : -1.0) * std::exp(log_mag);
    std::unique_lock lock(cache_mutex);
    cache.emplace(key, value);
    return value;
}

// Jacobi sum with the half-shifted argument factors (x-1)/2 and (x+1)/2
// supplied directly; callers near x = 1 pass them without cancellation.
inline Cplx jacobi_p_halves(int n, double alpha, double beta, Cplx a_half, Cplx b_half) {
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

} // namespace detail

/// Eigenspace basis element
///   (-1)^n sqrt((gamma-2m)/pi) sqrt(n! Gamma(gamma-m+1) / (m! Gamma(gamma-2m+n+1)))
///   (1-|z|^2)^{-m} conj(z)^{m-n} P_n^{(m-n, gamma-2m)}(1 - 2|z|^2).
/// For n > m the negative power of conj(z) cancels against the vanishing
/// order of the Jacobi factor; below a small radius the product is formed
/// term by term in (z, conj z) so the finite limit survives at z = 0.
inline Cplx phi_eigen(int n, const ModelParams& params, Cplx z) {
    if (n < 0)
        throw std::domain_error("phi_eigen: requires n >= 0");
    params.validate();
    const double r2 = std::norm(z);
    if (!(r2 < 1.0))
        throw std::domain_error("phi_eigen: requires |z| < 1");

    const int m = params.m;
    const double gp = params.gamma_prime();
    const double norm_c = detail::eigen_norm_constant(n, params);
    const double one_minus = 1.0 - r2;
    const double envelope = std::pow(one_minus, -static_cast<double>(m));

    // direct product; guarded against underflow of the Jacobi leading
    // order r^{2(n-m)} which would turn the quotient into 0/0
    const bool tiny = std::abs(z) < 1e-8 ||
                      (n > m && static_cast<double>(n - m) * std::log10(std::max(r2, 1e-320)) < -250.0);
    if (!tiny) {
        const Cplx p = detail::jacobi_p_halves(n, static_cast<double>(m) - n, gp, Cplx{-r2, 0.0},
                                               Cplx{one_minus, 0.0});
        if (n <= m)
            return norm_c * envelope * ipow(std::conj(z), m - n) * p;
        return norm_c * envelope * p / ipow(std::conj(z), n - m);
    }

    // expanded form: conj(z)^{m-n} P_n distributed over the sum, exponents
    // k and k+m-n both nonnegative on the surviving terms
    const Cplx zb = std::conj(z);
    Cplx sum{0.0, 0.0};
    const int k0 = std::max(0, n - m);
    for (int k = k0; k <= n; ++k) {
        const double c1 = binomial_real(static_cast<double>(m), n - k);
        if (c1 == 0.0) continue;
        const double c2 = binomial_real(n + gp, k);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += (c1 * c2 * sign) * ipow(z, k) * ipow(zb, k + m - n) *
               std::pow(one_minus, static_cast<double>(n - k));
    }
    return norm_c * envelope * sum;
}

/// Circular Jacobi polynomial ((gp+1)_n / n!) 2F1(-n, gp/2+1, gp+1; 1 - e^{i theta}),
/// evaluated by the three-term contiguous recurrence in n. The forward
/// hypergeometric sum cancels catastrophically for moderate n on the
/// circle; the recurrence roots sit on the unit circle, so errors grow at
/// most polynomially.
class KetSequence {
  public:
    KetSequence(double gamma_prime, double theta)
        : gp_(gamma_prime), b_(0.5 * gamma_prime + 1.0), c_(gamma_prime + 1.0) {
        if (!(gamma_prime > 0.0))
            throw std::domain_error("KetSequence: requires gamma_prime > 0");
        const Cplx eitheta = std::exp(Cplx{0.0, theta});
        x_ = 1.0 - eitheta;
        one_minus_x_ = eitheta;
    }

    /// Hypergeometric value 2F1(-n, b, c; x) for the next n (0, 1, 2, ...).
    Cplx next_f() {
        if (n_ == 0) {
            f_cur_ = Cplx{1.0, 0.0};
        } else if (n_ == 1) {
            f_prev_ = f_cur_;
            f_cur_ = 1.0 - (b_ / c_) * x_;
        } else {
            const double k = n_ - 1;
            const Cplx f_next =
                ((2.0 * k + c_ - (b_ + k) * x_) * f_cur_ - (k * one_minus_x_) * f_prev_) /
                (c_ + k);
            f_prev_ = f_cur_;
            f_cur_ = f_next;
        }
        ++n_;
        return f_cur_;
    }

    /// Orthonormalized ket value sqrt((gp+1)_n / n!) 2F1(...) for the next n.
    Cplx next_ket() {
        const Cplx f = next_f();
        // ratio sqrt((gp+n)/n) extends the normalization each step
        if (n_ - 1 > 0) q_ *= std::sqrt((gp_ + (n_ - 1)) / static_cast<double>(n_ - 1));
        return q_ * f;
    }

  private:
    double gp_;
    double b_, c_;
    Cplx x_, one_minus_x_;
    Cplx f_prev_{0.0, 0.0}, f_cur_{1.0, 0.0};
    double q_ = 1.0;
    int n_ = 0;
};

/// ((gp+1)_n / n!) 2F1(-n, gp/2+1, gp+1; 1 - e^{i theta}).
inline Cplx circular_jacobi(int n, double gamma_prime, double theta) {
    if (n < 0)
        throw std::domain_error("circular_jacobi: requires n >= 0");
    KetSequence seq(gamma_prime, theta);
    Cplx f{1.0, 0.0};
    for (int k = 0; k <= n; ++k)
        f = seq.next_f();
    double pref = 1.0;
    for (int k = 1; k <= n; ++k)
        pref *= (gamma_prime + k) / k;
    return pref * f;
}

/// Orthonormalized ket sqrt(n! / (gp+1)_n) * circular_jacobi(n, gp, theta).
inline Cplx ket(int n, double gamma_prime, double theta) {
    if (n < 0)
        throw std::domain_error("ket: requires n >= 0");
    KetSequence seq(gamma_prime, theta);
    Cplx v{1.0, 0.0};
    for (int k = 0; k <= n; ++k)
        v = seq.next_ket();
    return v;
}

/// All kets 0..n_max at one angle in a single recurrence pass.
inline std::vector<Cplx> ket_values(int n_max, double gamma_prime, double theta) {
    KetSequence seq(gamma_prime, theta);
    std::vector<Cplx> out;
    out.reserve(n_max + 1);
    for (int k = 0; k <= n_max; ++k)
        out.push_back(seq.next_ket());
    return out;
}

} // namespace cbarg

#endif // CBARG_BASES_HPP
