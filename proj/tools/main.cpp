// Command-line front end: evaluate basis elements, coherent states and
// transforms onto polar grids, or run the verification suite. Exit codes:
// 0 success / all identities passed, 1 verification failure, 2 usage
// error, 3 I/O error.

#include <CLI11.hpp>

#include <cbarg/io.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using cbarg::Cplx;

struct Options {
    double gamma = 6.0;
    int m = 1;
    int n = 0;
    int grid_radial = 16;
    int grid_angular = 32;
    double max_radius = 0.85;
    int circle_level = 8;
    int disk_radial = 32;
    int disk_angular = 64;
    unsigned seed = 42;
    double fd_step = 1e-3;
    double series_tol = 1e-12;
    double theta = 0.0;
    std::string z_literal;
    std::string out_path;
    std::string format; // csv | json; empty = command default
};

// complex literal "a+bi" (either part optional, signs free)
Cplx parse_complex(const std::string& text) {
    const char* p = text.c_str();
    char* end = nullptr;
    const double first = std::strtod(p, &end);
    if (end == p)
        throw std::invalid_argument("not a complex literal: " + text);
    if (*end == 'i' && *(end + 1) == '\0')
        return {0.0, first};
    if (*end == '\0')
        return {first, 0.0};
    const char* q = end;
    const double second = std::strtod(q, &end);
    if (end == q || *end != 'i' || *(end + 1) != '\0')
        throw std::invalid_argument("not a complex literal: " + text);
    return {first, second};
}

int write_payload(const Options& opt, const std::function<void(std::ostream&)>& write) {
    if (opt.out_path.empty()) {
        write(std::cout);
        return 0;
    }
    std::ofstream os(opt.out_path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output path: " << opt.out_path << "\n";
        return 3;
    }
    write(os);
    if (!os) {
        std::cerr << "write failed: " << opt.out_path << "\n";
        return 3;
    }
    return 0;
}

int run_grid_command(const Options& opt, const cbarg::DiskGrid& grid) {
    const std::string format = opt.format.empty() ? "csv" : opt.format;
    return write_payload(opt, [&](std::ostream& os) {
        if (format == "json")
            cbarg::write_grid_json(os, grid);
        else
            cbarg::write_grid_csv(os, grid);
    });
}

int run_eval_basis(const Options& opt) {
    const cbarg::ModelParams params{opt.gamma, opt.m};
    const auto points = cbarg::polar_grid(opt.grid_radial, opt.grid_angular, opt.max_radius);
    cbarg::DiskGrid grid;
    grid.params = params;
    grid.provenance = "eval-basis";
    grid.points = points;
    grid.values.reserve(points.size());
    for (const Cplx z : points)
        grid.values.push_back(cbarg::phi_eigen(opt.n, params, z));
    return run_grid_command(opt, grid);
}

int run_eval_cs(const Options& opt) {
    const cbarg::ModelParams params{opt.gamma, opt.m};
    std::vector<Cplx> points;
    if (!opt.z_literal.empty())
        points.push_back(parse_complex(opt.z_literal));
    else
        points = cbarg::polar_grid(opt.grid_radial, opt.grid_angular, opt.max_radius);

    cbarg::DiskGrid grid;
    grid.params = params;
    grid.provenance = "eval-cs";
    grid.points = points;
    grid.values.reserve(points.size());
    for (const Cplx z : points) {
        if (!(std::norm(z) < 1.0))
            throw std::domain_error("--z must lie inside the unit disk");
        grid.values.push_back(opt.m == 0 ? cbarg::cs_closed(opt.gamma, z, opt.theta)
                                         : cbarg::cs_closed_m(params, z, opt.theta));
    }
    return run_grid_command(opt, grid);
}

int run_transform(const Options& opt) {
    const cbarg::ModelParams params{opt.gamma, opt.m};
    const double gp = params.gamma_prime();
    const int n = opt.n;
    auto phi = [n, gp](double th) { return cbarg::ket(n, gp, th); };
    const auto points = cbarg::polar_grid(opt.grid_radial, opt.grid_angular, opt.max_radius);
    const auto grid = cbarg::transform_grid(params, phi, points, opt.circle_level);
    return run_grid_command(opt, grid);
}

int run_verify(const Options& opt) {
    cbarg::SuiteConfig config;
    config.focus = cbarg::ModelParams{opt.gamma, opt.m};
    config.seed = opt.seed;
    config.circle_level = opt.circle_level;
    config.disk_radial = opt.disk_radial;
    config.disk_angular = opt.disk_angular;
    config.fd_step = opt.fd_step;
    config.series_tol = opt.series_tol;

    const auto reports = cbarg::run_suite(config);
    const std::string format = opt.format.empty() ? "json" : opt.format;
    const int io_status = write_payload(opt, [&](std::ostream& os) {
        if (format == "csv")
            cbarg::write_reports_csv(os, reports);
        else
            cbarg::write_reports_json(os, reports);
    });
    if (io_status != 0) return io_status;

    bool all_passed = true;
    for (const auto& rep : reports) {
        if (!rep.passed) {
            all_passed = false;
            std::cerr << "FAILED: " << rep.identity_name << " (gamma=" << rep.params.gamma
                      << ", m=" << rep.params.m << ", defect=" << rep.max_defect
                      << ", tolerance=" << rep.tolerance << ")\n";
        }
    }
    return all_passed ? 0 : 1;
}

void add_common_options(CLI::App* cmd, Options& opt, bool with_grid, bool with_quadrature) {
    cmd->add_option("--gamma", opt.gamma, "magnetic strength parameter, > 2m");
    cmd->add_option("--m", opt.m, "Landau level index, >= 0");
    cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    if (with_grid) {
        cmd->add_option("--grid-radial", opt.grid_radial, "radial grid count")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--grid-angular", opt.grid_angular, "angular grid count")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--max-radius", opt.max_radius, "outermost grid radius, < 1")
            ->check(CLI::Range(1e-6, 0.999999));
    }
    if (with_quadrature) {
        cmd->add_option("--circle-level", opt.circle_level, "tanh-sinh level")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--disk-radial", opt.disk_radial, "radial quadrature size")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--disk-angular", opt.disk_angular, "angular quadrature size")
            ->check(CLI::PositiveNumber);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circle-to-disk coherent state transforms and their verification suite"};
    app.require_subcommand(1);

    Options opt;

    auto* eval_basis = app.add_subcommand("eval-basis", "evaluate a basis element on a grid");
    add_common_options(eval_basis, opt, true, false);
    eval_basis->add_option("--n", opt.n, "basis degree")->check(CLI::NonNegativeNumber);

    auto* eval_cs = app.add_subcommand("eval-cs", "evaluate a coherent state wave function");
    add_common_options(eval_cs, opt, true, false);
    eval_cs->add_option("--theta", opt.theta, "circle angle in radians");
    eval_cs->add_option("--z", opt.z_literal, "label point a+bi (otherwise a grid sweep)");

    auto* transform = app.add_subcommand("transform", "transform a ket onto a disk grid");
    add_common_options(transform, opt, true, true);
    transform->add_option("--n", opt.n, "ket index")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_common_options(verify, opt, false, true);
    verify->add_option("--seed", opt.seed, "seed for randomized draws");
    verify->add_option("--fd-step", opt.fd_step, "finite difference step");
    verify->add_option("--series-tol", opt.series_tol, "series truncation tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cbarg::ModelParams{opt.gamma, opt.m}.validate();
    } catch (const std::exception& e) {
        std::cerr << "invalid --gamma/--m: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval_basis->parsed()) return run_eval_basis(opt);
        if (eval_cs->parsed()) return run_eval_cs(opt);
        if (transform->parsed()) return run_transform(opt);
        return run_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
