#pragma once

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gfd/differentiable.hpp"
#include "gfd/ode.hpp"
#include "gfd/operators.hpp"
#include "gfd/polynomial.hpp"
#include "gfd/report.hpp"
#include "gfd/verify.hpp"

namespace gfd::cli {

namespace detail {

inline OperatorParams make_params(double alpha, std::optional<double> beta, const std::string& strategy) {
    if (strategy == "alpha") return OperatorParams::beta_equals_alpha(alpha);
    if (strategy == "exponent") return OperatorParams::beta_equals_exponent(alpha);
    if (!beta) throw std::invalid_argument("--beta is required with --strategy fixed");
    return OperatorParams::fixed(alpha, *beta);
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

struct SolveArgs {
    std::string problem;
    double alpha = 0.75;
    double k = 1.0;
    double lambda = 1.0;
    int grid = 100;
    double x_end = 1.0;
    std::string method = "closed";
    std::string out;
    int terms = 0;
};

inline SolutionCurve run_solve(const SolveArgs& a) {
    const bool riccati = a.problem == "riccati1" || a.problem == "riccati2";
    if (a.method == "closed") {
        if (!riccati) throw std::invalid_argument("closed-form solutions exist for riccati1 and riccati2 only");
        const RiccatiKind kind = a.problem == "riccati1" ? RiccatiKind::Riccati1 : RiccatiKind::Riccati2;
        const FracOrder order(a.alpha);
        SolutionCurve curve{{{0.0, 0.0}}, SolutionMethod::ClosedForm};
        for (double x : uniform_grid(a.grid, a.x_end))
            curve.samples.push_back({x, riccati_closed(kind, x, order, ShapeParam(a.alpha))});
        return curve;
    }
    if (a.method == "series") {
        if (a.problem != "example1" && a.problem != "example2")
            throw std::invalid_argument("series solutions exist for example1 and example2 only");
        const int n = a.terms > 0 ? a.terms : (a.problem == "example1" ? 40 : 20);
        SolutionCurve curve{{{0.0, 0.0}}, SolutionMethod::Series, n};
        for (double x : uniform_grid(a.grid, a.x_end)) {
            const double y = a.problem == "example1" ? series_solution_ex1(a.k, x, n).value
                                                     : series_solution_ex2(x, n).value;
            curve.samples.push_back({x, y});
        }
        return curve;
    }
    if (a.method == "numeric") {
        GfdProblem p = [&] {
            if (a.problem == "riccati1") return problems::riccati1(a.alpha);
            if (a.problem == "riccati2") return problems::riccati2(a.alpha);
            if (a.problem == "example1") return problems::example1(a.k);
            if (a.problem == "example2") return problems::example2();
            if (a.problem == "example3") return problems::example3();
            if (a.problem == "example4") return problems::example4(a.lambda);
            throw std::invalid_argument("unknown problem '" + a.problem + "'");
        }();
        return solve_numeric(p, a.x_end, std::max(16, a.grid));
    }
    throw std::invalid_argument("unknown method '" + a.method + "'");
}

}  // namespace detail

/// Entry point shared by the gfd executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized fractional derivative toolkit"};
    app.require_subcommand(1);

    // deriv
    auto* deriv = app.add_subcommand("deriv", "Apply the fractional derivative to a generalized polynomial");
    std::string expr;
    double alpha = 0.5;
    std::optional<double> beta;
    std::string strategy = "fixed";
    double at = 1.0;
    deriv->add_option("--expr", expr, "Polynomial literal, e.g. \"3*t^2 + t^(1/2)\"")->required();
    deriv->add_option("--alpha", alpha, "Order, 0 < alpha <= 1")->required();
    deriv->add_option("--beta", beta, "Shape parameter (strategy fixed)");
    deriv->add_option("--strategy", strategy, "fixed|alpha|exponent")
        ->check(CLI::IsMember({"fixed", "alpha", "exponent"}));
    deriv->add_option("--at", at, "Evaluation point t > 0")->required();

    // integrate
    auto* integrate = app.add_subcommand("integrate", "Fractional integral of a generalized polynomial");
    double to = 1.0;
    integrate->add_option("--expr", expr)->required();
    integrate->add_option("--alpha", alpha)->required();
    integrate->add_option("--beta", beta);
    integrate->add_option("--strategy", strategy)->check(CLI::IsMember({"fixed", "alpha"}));
    integrate->add_option("--to", to, "Upper limit t > 0")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one of the built-in fractional IVPs");
    detail::SolveArgs sa;
    solve->add_option("--problem", sa.problem)
        ->required()
        ->check(CLI::IsMember({"riccati1", "riccati2", "example1", "example2", "example3", "example4"}));
    solve->add_option("--alpha", sa.alpha, "Order (riccati problems; examples use 1/2)");
    solve->add_option("--k", sa.k, "Rate k in example1");
    solve->add_option("--lambda", sa.lambda, "Coefficient lambda in example4");
    solve->add_option("--grid", sa.grid, "Number of grid points / RK4 steps")->check(CLI::PositiveNumber);
    solve->add_option("--x-end", sa.x_end, "Right end of the domain")->check(CLI::PositiveNumber);
    solve->add_option("--terms", sa.terms, "Series truncation (default 40 / 20)");
    solve->add_option("--method", sa.method)->check(CLI::IsMember({"closed", "series", "numeric"}));
    solve->add_option("--out", sa.out, "CSV output file")->required();

    // table
    auto* table = app.add_subcommand("table", "Reproduce a reference table");
    int table_id = 1;
    std::optional<double> tolerance;
    std::string out_path;
    table->add_option("--id", table_id)->required()->check(CLI::Range(1, 3));
    table->add_option("--tolerance", tolerance);
    table->add_option("--out", out_path)->required();

    // figure
    auto* figure = app.add_subcommand("figure", "Write error-curve data for a figure");
    int figure_id = 1;
    int points = 100;
    figure->add_option("--id", figure_id)->required()->check(CLI::Range(1, 3));
    figure->add_option("--points", points)->check(CLI::Range(2, 1000000));
    figure->add_option("--out", out_path)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    std::string filter;
    bool inject_conformable = false;
    verify->add_option("--filter", filter, "Only run checks whose name contains NAME");
    verify->add_option("--tolerance", tolerance, "Override the table regression tolerance");
    verify->add_flag("--inject-conformable", inject_conformable,
                     "Recompute GFD table columns with A = 1 (expected to fail)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*deriv) {
            const auto poly = parse_polynomial(expr);
            const auto p = detail::make_params(alpha, beta, strategy);
            const auto image = gfd_poly(poly, p);
            out << "f(t)      = " << to_string(poly) << '\n';
            out << "D^a f(t)  = " << to_string(image) << '\n';
            out << "D^a f(" << format_double("%g", at) << ") = " << format_double("%.15g", image.eval(at)) << '\n';
            return 0;
        }
        if (*integrate) {
            const auto poly = parse_polynomial(expr);
            const auto p = detail::make_params(alpha, beta, strategy);
            const double numeric = fractional_integral([&](double x) { return poly.eval(x); }, p, to);
            const auto closed = fractional_integral_poly(poly, p);
            out << "I_a f(t)  = " << to_string(closed) << '\n';
            out << "I_a f(" << format_double("%g", to) << ") = " << format_double("%.15g", numeric) << '\n';
            return 0;
        }
        if (*solve) {
            const auto curve = detail::run_solve(sa);
            auto file = detail::open_output(sa.out);
            write_curve_csv(file, curve);
            out << "wrote " << curve.samples.size() << " samples to " << sa.out << '\n';
            return 0;
        }
        if (*table) {
            const auto report = reproduce_table(table_id_from_int(table_id), {tolerance, false});
            auto file = detail::open_output(out_path);
            write_table_csv(file, report);
            write_table_summary(out, report);
            return report.passed() ? 0 : 1;
        }
        if (*figure) {
            const auto spec = figure_spec(figure_id);
            const auto data = emit_error_curves(spec.problem, FracOrder(spec.alpha), points, out_path);
            out << "wrote " << data.records.size() << " points to " << out_path
                << "; GFD error below CD error everywhere: " << (data.ordering_holds() ? "yes" : "no") << '\n';
            return data.ordering_holds() ? 0 : 1;
        }
        if (*verify) {
            const auto summary = run_verification_suite({filter, tolerance, inject_conformable});
            for (const auto& c : summary.checks)
                out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "  " << c.detail << '\n';
            out << summary.checks.size() << " checks, " << (summary.all_passed() ? "all passed" : "FAILURES") << '\n';
            return summary.all_passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace gfd::cli
