// Acceptance suite: every release-gating property at its pinned
// tolerance, one pass/fail line per criterion, nonzero exit if any
// criterion fails. Tolerances and runtime budgets are fixed here, not
// configurable.

#include <chrono>
#include <cstdio>
#include <vector>

#include <cbarg/io.hpp>

using cbarg::Cplx;
using cbarg::ModelParams;

namespace {

struct Criterion {
    const char* label;
    double max_defect;
    double tolerance;
    double runtime_s;
    double budget_s; // 0 = no stated budget
    bool passed;
};

std::vector<Criterion> results;

template <class Fn>
void run(const char* label, double tolerance, double budget_s, const Fn& fn) {
    const auto start = std::chrono::steady_clock::now();
    const double defect = fn();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = defect <= tolerance && (budget_s == 0.0 || elapsed < budget_s);
    results.push_back({label, defect, tolerance, elapsed, budget_s, ok});
    if (budget_s > 0.0)
        std::printf("%-52s %s  max_defect=%.3e tol=%.0e  (%.2fs < %.0fs)\n", label,
                    ok ? "PASS" : "FAIL", defect, tolerance, elapsed, budget_s);
    else
        std::printf("%-52s %s  max_defect=%.3e tol=%.0e  (%.2fs)\n", label, ok ? "PASS" : "FAIL",
                    defect, tolerance, elapsed);
    std::fflush(stdout);
}

constexpr int kLevel = 8;
constexpr int kDiskRadial = 32;
constexpr int kDiskAngular = 64;

const std::vector<ModelParams> kEigenSets{{6.0, 1}, {6.0, 2}, {9.5, 3}};
const std::vector<ModelParams> kCsSets{{4.5, 0}, {6.0, 1}, {6.0, 2}, {9.5, 4}};
const std::vector<ModelParams> kTransformSets{{2.5, 0}, {4.5, 0}, {6.0, 1}, {6.0, 2}, {9.5, 3}};

double criterion_masses() {
    double worst = 0.0;
    for (double gamma : {0.5, 2.5, 6.0, 9.5}) {
        worst = std::max(worst, cbarg::circle_mass_defect(gamma, kLevel));
        worst = std::max(worst, cbarg::disk_mass_defect(gamma, 0, kDiskRadial, kDiskAngular));
    }
    return worst;
}

double criterion_orthonormality() {
    double worst = 0.0;
    for (double gamma : {2.5, 6.0, 9.5})
        worst = std::max(worst, cbarg::gram_defect_bergman(
                                    gamma, 12, cbarg::build_disk_rule(gamma, kDiskRadial,
                                                                      kDiskAngular)));
    for (const auto& p : kEigenSets)
        worst = std::max(worst, cbarg::gram_defect_eigen(
                                    p, 10, cbarg::build_disk_rule(p.gamma, p.m, kDiskRadial,
                                                                  kDiskAngular)));
    for (double gp : {2.5, 6.0, 9.5, 4.0, 2.0, 3.5})
        worst = std::max(worst,
                         cbarg::gram_defect_ket(gp, 12, cbarg::build_circle_rule(gp, kLevel)));
    return worst;
}

double criterion_series_closed() {
    double worst = 0.0;
    for (const auto& p : kCsSets)
        worst = std::max(worst, cbarg::series_closed_max_defect(p));
    return worst;
}

double criterion_normalization() {
    double worst = 0.0;
    for (const auto& p : kCsSets)
        worst = std::max(worst, cbarg::cs_norm_max_defect(p, kLevel));
    return worst;
}

double criterion_transforms() {
    double worst_map = 0.0;
    for (const auto& p : kTransformSets)
        worst_map = std::max(worst_map, cbarg::basis_map_max_defect(p, 6, kLevel) / 1e-7);
    double worst_iso = 0.0;
    for (const auto& p : kTransformSets) {
        const auto d_rule = cbarg::build_disk_rule(p.gamma, p.m, kDiskRadial, kDiskAngular);
        worst_iso = std::max(
            worst_iso, cbarg::isometry_max_defect(p, 8, 3, 42u + static_cast<unsigned>(p.m),
                                                  kLevel, d_rule) /
                           1e-5);
    }
    // both sub-checks normalized by their own tolerance
    return std::max(worst_map, worst_iso);
}

double criterion_m0_reduction() {
    return std::max(cbarg::m0_collapse_cs_defect(5.3),
                    cbarg::m0_collapse_transform_defect(5.1, kLevel));
}

double criterion_eigen_equation() {
    double worst = 0.0;
    for (const auto& p : kEigenSets) {
        worst = std::max(worst, cbarg::eigen_equation_basis_defect(p, 5, 1e-3) / 1e-3);
        worst = std::max(worst, cbarg::eigen_equation_transform_defect(p, 1e-3, kLevel) / 1e-3);
        // order-2 decay in h: log2 ratio within 0.8 of 2
        worst = std::max(worst, cbarg::fd_order_defect(p, 3, std::polar(0.4, 1.1), 1e-3) / 0.8);
    }
    return worst;
}

double criterion_resolution_identity() {
    double worst = 0.0;
    for (const auto& p : std::vector<ModelParams>{{4.5, 0}, {6.0, 1}}) {
        const auto d_rule = cbarg::build_disk_rule(p.gamma, p.m, kDiskRadial, kDiskAngular);
        worst = std::max(worst, cbarg::resolution_identity_defect(p, 5, kLevel, d_rule));
    }
    return worst;
}

double criterion_jacobi_battery() {
    double worst = 0.0;
    worst = std::max(worst, cbarg::jacobi_hypergeometric_identity_defect(500, 43u));
    worst = std::max(worst, cbarg::jacobi_parity_identity_defect(500, 44u));
    worst = std::max(worst, cbarg::jacobi_negative_parameter_identity_defect(500, 45u));
    return worst;
}

} // namespace

int main() {
    std::printf("acceptance suite (circle level %d, disk %dx%d)\n", kLevel, kDiskRadial,
                kDiskAngular);

    run("1. measure masses (circle 1, disk pi/gamma)", 1e-10, 1.0, criterion_masses);
    run("2. orthonormality of the three families", 1e-8, 10.0, criterion_orthonormality);
    run("3. closed form vs series (generating formulas)", 1e-9, 30.0, criterion_series_closed);
    run("4. coherent state normalization", 1e-8, 0.0, criterion_normalization);
    run("5. transform isometry and basis mapping (scaled)", 1.0, 60.0, criterion_transforms);
    run("6. m = 0 reduction of transform and states", 1e-12, 0.0, criterion_m0_reduction);
    run("7. eigenvalue equation, order-2 decay (scaled)", 1.0, 30.0, criterion_eigen_equation);
    run("8. resolution of identity (5x5 ket block)", 1e-6, 0.0, criterion_resolution_identity);
    run("9. Jacobi identity battery (3 x 500 draws)", 1e-10, 5.0, criterion_jacobi_battery);

    int failures = 0;
    for (const auto& c : results)
        if (!c.passed) ++failures;
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
