#include <doctest.h>

#include <cbarg/coherent.hpp>
#include <cbarg/quadrature.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"

using cbarg::Cplx;
using cbarg::ModelParams;
using std::numbers::pi;

namespace {

// Long double series oracle for the lowest-level closed form:
//   (1-|z|^2)^((gamma+1)/2) sum_n ((gamma+1)_n / n!) 2F1(-n, g/2+1, g+1; 1-e^{i t}) z^n
// with the hypergeometric values generated by the contiguous recurrence.
oracles::LCplx cs_reference_ld(long double gamma, oracles::LCplx z, long double theta,
                               int n_terms) {
    const oracles::LCplx x = 1.0L - std::exp(oracles::LCplx{0.0L, theta});
    const oracles::LCplx one_minus_x = std::exp(oracles::LCplx{0.0L, theta});
    const long double b = 0.5L * gamma + 1.0L;
    const long double c = gamma + 1.0L;

    oracles::LCplx sum{0.0L, 0.0L};
    oracles::LCplx f_prev{0.0L, 0.0L}, f_cur{1.0L, 0.0L};
    oracles::LCplx zpow{1.0L, 0.0L};
    long double poch_ratio = 1.0L;
    for (int n = 0; n < n_terms; ++n) {
        if (n == 1) {
            f_prev = f_cur;
            f_cur = 1.0L - (b / c) * x;
        } else if (n >= 2) {
            const long double k = n - 1.0L;
            const oracles::LCplx f_next =
                ((2.0L * k + c - (b + k) * x) * f_cur - (k * one_minus_x) * f_prev) / (c + k);
            f_prev = f_cur;
            f_cur = f_next;
        }
        if (n > 0) poch_ratio *= (gamma + n) / static_cast<long double>(n);
        sum += poch_ratio * f_cur * zpow;
        zpow *= z;
    }
    const long double r2 = std::norm(z);
    return std::pow(1.0L - r2, 0.5L * (gamma + 1.0L)) * sum;
}

} // namespace

TEST_CASE("kernel_diag closed form and origin values") {
    CHECK(cbarg::kernel_diag(ModelParams{4.0, 0}, Cplx{0.0, 0.0}) ==
          doctest::Approx(4.0 / pi).epsilon(1e-14));
    CHECK(cbarg::kernel_diag(ModelParams{6.0, 1}, Cplx{0.0, 0.0}) ==
          doctest::Approx(4.0 / pi).epsilon(1e-14));
    CHECK(cbarg::kernel_diag(ModelParams{4.0, 0}, Cplx{0.6, 0.0}) ==
          doctest::Approx(4.0 / pi * std::pow(0.64, -5.0)).epsilon(1e-13));
    CHECK_THROWS_AS(cbarg::kernel_diag(ModelParams{4.0, 0}, Cplx{1.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("kernel_diag equals the basis square sum") {
    const std::vector<ModelParams> sets{{4.5, 0}, {6.0, 1}, {6.0, 2}, {9.5, 4}};
    for (const auto& p : sets) {
        for (double r : {0.1, 0.4, 0.7}) {
            const Cplx z = std::polar(r, 0.9);
            double series = 0.0;
            for (int n = 0; n <= 400; ++n) {
                const Cplx phi = (p.m == 0) ? cbarg::phi_bergman(n, p.gamma, z)
                                            : cbarg::phi_eigen(n, p, z);
                series += std::norm(phi);
            }
            const double kd = cbarg::kernel_diag(p, z);
            CHECK(std::abs(series - kd) / kd < 1e-8);
        }
    }
}

TEST_CASE("cs_closed at the origin label") {
    for (double theta : {0.0, 1.0, pi, 5.5})
        CHECK(std::abs(cbarg::cs_closed(3.3, Cplx{0.0, 0.0}, theta) - Cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("cs_closed against the extended-precision series") {
    const double gamma = 4.5;
    const Cplx z{0.3, 0.2};
    const double theta = 1.0;
    const oracles::LCplx ref =
        cs_reference_ld(gamma, oracles::LCplx{0.3L, 0.2L}, theta, 160);
    const Cplx got = cbarg::cs_closed(gamma, z, theta);
    CHECK(std::abs(got - Cplx{(double)ref.real(), (double)ref.imag()}) / std::abs(got) < 1e-12);
}

TEST_CASE("cs_closed is normalized on the circle") {
    for (double gamma : {2.5, 4.5, 6.0}) {
        for (const Cplx z : {Cplx{0.3, 0.2}, Cplx{-0.5, 0.1}, Cplx{0.0, 0.7}}) {
            const auto rule = cbarg::build_circle_rule_for_label(gamma, 8, z);
            auto cs = [&](double th) { return cbarg::cs_closed(gamma, z, th); };
            const double nrm = cbarg::norm_sq(rule, cs);
            CHECK(std::abs(nrm - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("cs_closed_m collapses to cs_closed at m = 0") {
    const double gamma = 5.3;
    const ModelParams p{gamma, 0};
    for (double r : {0.0, 0.2, 0.6, 0.9}) {
        for (double a : {0.0, 2.0, 4.1}) {
            const Cplx z = std::polar(r, a);
            for (double theta : {0.5, pi, 5.0}) {
                const Cplx lhs = cbarg::cs_closed_m(p, z, theta);
                const Cplx rhs = cbarg::cs_closed(gamma, z, theta);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
            }
        }
    }
}

TEST_CASE("cs_closed_m at z = 0 stays finite and matches the series and hand value") {
    const ModelParams p{6.0, 1};
    const Cplx got = cbarg::cs_closed_m(p, Cplx{0.0, 0.0}, pi);
    // sqrt(Gamma(6)/Gamma(5)) * (-1) * (1 - (3/5) * 2) = sqrt(5)/5
    CHECK(got.real() == doctest::Approx(std::sqrt(5.0) / 5.0).epsilon(1e-13));
    CHECK(std::abs(got.imag()) < 1e-15);

    const auto series = cbarg::cs_series(p, Cplx{0.0, 0.0}, pi);
    CHECK(std::abs(series.value - got) < 1e-12);
}

TEST_CASE("cs_closed_m is normalized on the circle of its own measure") {
    for (const auto& p : std::vector<ModelParams>{{6.0, 1}, {6.0, 2}, {9.5, 4}}) {
        for (const Cplx z : {Cplx{0.3, 0.2}, Cplx{-0.4, 0.5}, Cplx{0.0, 0.0}}) {
            const auto rule = cbarg::build_circle_rule_for_label(p.gamma_prime(), 8, z);
            auto cs = [&](double th) { return cbarg::cs_closed_m(p, z, th); };
            const double nrm = cbarg::norm_sq(rule, cs);
            CHECK(std::abs(nrm - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("series route agrees with the closed forms on the certification grid") {
    const std::vector<ModelParams> sets{{4.5, 0}, {6.0, 1}, {6.0, 2}, {9.5, 4}};
    for (const auto& p : sets) {
        for (double r : {0.1, 0.4, 0.7}) {
            for (double zarg : {0.0, 2.0 * pi / 3.0, 4.0 * pi / 3.0}) {
                for (double theta : {0.5, pi, 5.0}) {
                    const Cplx z = std::polar(r, zarg);
                    const Cplx closed = (p.m == 0) ? cbarg::cs_closed(p.gamma, z, theta)
                                                   : cbarg::cs_closed_m(p, z, theta);
                    const auto series = cbarg::cs_series(p, z, theta, 1e-12);
                    CHECK(std::abs(series.value - closed) / std::abs(closed) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("cs_series at the origin uses a single term") {
    const auto res = cbarg::cs_series(ModelParams{4.0, 0}, Cplx{0.0, 0.0}, 2.2);
    CHECK(res.terms_used == 1);
    CHECK(std::abs(res.value - Cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("cs_series reports non-convergence near the boundary") {
    CHECK_THROWS_AS(cbarg::cs_series(ModelParams{4.0, 0}, Cplx{0.9999, 0.0}, 1.0, 1e-12),
                    std::runtime_error);
}

TEST_CASE("resolution of identity on the low ket block") {
    for (const auto& p : std::vector<ModelParams>{{4.5, 0}, {6.0, 1}}) {
        const double gp = p.gamma_prime();
        const auto d_rule = cbarg::build_disk_rule(p.gamma, p.m, 32, 64);

        // overlaps <ket_i | z> for every disk node; the circle rule is
        // split at the kernel peak of each label so rim labels resolve
        const int n_kets = 5;
        std::vector<std::vector<Cplx>> overlap(d_rule.nodes.size(),
                                               std::vector<Cplx>(n_kets));
        for (size_t k = 0; k < d_rule.nodes.size(); ++k) {
            const Cplx z = d_rule.nodes[k];
            const auto c_rule = cbarg::build_circle_rule_for_label(gp, 8, z);
            std::vector<Cplx> acc(n_kets, Cplx{0.0, 0.0});
            for (size_t q = 0; q < c_rule.nodes.size(); ++q) {
                const Cplx cs = (p.m == 0) ? cbarg::cs_closed(p.gamma, z, c_rule.nodes[q])
                                           : cbarg::cs_closed_m(p, z, c_rule.nodes[q]);
                cbarg::KetSequence kets(gp, c_rule.nodes[q]);
                for (int i = 0; i < n_kets; ++i)
                    acc[i] += c_rule.weights[q] * std::conj(kets.next_ket()) * cs;
            }
            overlap[k] = acc;
        }
        double worst = 0.0;
        for (int i = 0; i < n_kets; ++i)
            for (int j = 0; j < n_kets; ++j) {
                Cplx acc{0.0, 0.0};
                for (size_t k = 0; k < d_rule.nodes.size(); ++k)
                    acc += d_rule.weights[k] * cbarg::kernel_diag(p, d_rule.nodes[k]) *
                           overlap[k][i] * std::conj(overlap[k][j]);
                worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
            }
        CHECK(worst < 1e-6);
    }
}
