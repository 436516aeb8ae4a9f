#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gfd/differentiable.hpp"
#include "gfd/ode.hpp"
#include "gfd/operators.hpp"
#include "gfd/polynomial.hpp"
#include "gfd/report.hpp"
#include "gfd/specfun.hpp"

namespace gfd {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyOptions {
    std::string filter;                   // substring of check names; empty runs all
    std::optional<double> table_tolerance;
    bool conformable_present = false;     // recompute GFD table columns with A = 1
};

struct VerifySummary {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
    }
};

namespace detail {

inline std::string max_str(double v) { return "max " + format_double("%.3e", v); }

inline CheckResult check_gamma_recurrence() {
    double worst = 0.0;
    for (double x : {0.1, 0.5, 0.9, 1.5, 7.3}) {
        const double lhs = std::exp(ln_gamma(x + 1.0));
        const double rhs = x * std::exp(ln_gamma(x));
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
    return {"gamma-recurrence", worst <= 1e-12, max_str(worst)};
}

inline std::vector<std::pair<std::string, DifferentiableFn>> smooth_family() {
    return {{"t^2", fn::power(2.0)}, {"t^1.5", fn::power(1.5)}, {"sin", fn::sin()}, {"exp", fn::exp()}};
}

inline CheckResult check_limit_vs_closed() {
    double worst = 0.0;
    for (const auto& [name, f] : smooth_family())
        for (double alpha : {0.25, 0.5, 0.75, 1.0})
            for (double beta : {0.5, 1.0, 1.5, 2.0})
                for (double t : {0.25, 1.0, 2.0}) {
                    const auto p = OperatorParams::fixed(alpha, beta);
                    worst = std::max(worst, std::abs(gfd_limit(f, p, t) - gfd_closed(f, p, t)));
                }
    return {"limit-vs-closed", worst <= 1e-6, max_str(worst)};
}

inline CheckResult check_linearity() {
    const auto f = fn::sin();
    const auto g = fn::power(2.5);
    double worst = 0.0;
    for (double t : {0.3, 1.0, 1.7}) {
        const auto p = OperatorParams::fixed(0.6, 1.3);
        const double lhs = gfd_closed(fn::sum(f, g, 2.0, -3.0), p, t);
        const double rhs = 2.0 * gfd_closed(f, p, t) - 3.0 * gfd_closed(g, p, t);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return {"linearity", worst <= 1e-12, max_str(worst)};
}

inline double max_coefficient_mismatch(const CompositionSides& s) {
    if (s.lhs.size() != s.rhs.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t i = 0; i < s.lhs.size(); ++i) {
        const auto& a = s.lhs.terms()[i];
        const auto& b = s.rhs.terms()[i];
        if (std::abs(a.exponent - b.exponent) > exponent_merge_tolerance) return INFINITY;
        worst = std::max(worst, std::abs(a.coeff - b.coeff) / std::max(std::abs(b.coeff), 1e-300));
    }
    return worst;
}

inline CheckResult check_composition() {
    std::mt19937_64 rng(20211023);
    std::uniform_real_distribution<double> order(0.05, 0.95);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double a1 = order(rng);
        const double a2 = order(rng);
        std::vector<Term> terms{{coeff(rng), 0.0}};
        for (int j = 1; j <= 4; ++j) terms.push_back({coeff(rng), static_cast<double>(j)});
        for (int j = 0; j < 3; ++j) terms.push_back({coeff(rng), a2 + 0.01 + 4.0 * frac(rng)});
        const auto sides = compose_check(GeneralizedPolynomial(terms), FracOrder(a1), FracOrder(a2));
        worst = std::max(worst, max_coefficient_mismatch(sides));
    }
    return {"composition", worst <= 1e-12, max_str(worst)};
}

inline CheckResult check_product_quotient(bool quotient) {
    struct Case {
        DifferentiableFn f, g;
        double alpha, t;
    };
    const std::vector<Case> cases = {
        {fn::power(1.0), fn::power(2.0), 0.5, 1.0},
        {fn::sin(), fn::cos(), 0.8, 0.7},
        {fn::power(2.0), fn::power(1.0), 0.5, 2.0},
        {fn::constant(1.0), fn::from_polynomial({{1.0, 0.0}, {1.0, 2.0}}), 0.6, 1.0},
        {fn::exp(-0.5), fn::power(0.75), 0.9, 1.4},
    };
    double worst = 0.0;
    for (const auto& c : cases) {
        const auto p = OperatorParams::beta_equals_alpha(c.alpha);
        const RuleResidual r = quotient ? quotient_rule_residual(c.f, c.g, p, c.t)
                                        : product_rule_residual(c.f, c.g, p, c.t);
        worst = std::max(worst, r.residual() / (1.0 + std::abs(r.lhs)));
    }
    return {quotient ? "quotient-rule" : "product-rule", worst <= 1e-10, max_str(worst)};
}

inline CheckResult check_rolle() {
    const auto f = fn::from_polynomial({{2.0, 0.0}, {-3.0, 1.0}, {1.0, 2.0}});  // (t-1)(t-2)
    const auto p = OperatorParams::beta_equals_alpha(0.5);
    const double c = rolle_point(f, 1.0, 2.0, p);
    const double d = std::abs(gfd_closed(f, p, c));
    return {"rolle", d <= 1e-10 && std::abs(c - 1.5) < 1e-9,
            "c = " + format_double("%.12f", c) + ", |D f(c)| = " + format_double("%.2e", d)};
}

inline CheckResult check_mean_value() {
    const auto p = OperatorParams::beta_equals_alpha(0.5);
    const auto gamma_h = mvt_search(fn::power(1.0), 1.0, 4.0, p);
    const auto corrected = mvt_search(fn::power(1.0), 1.0, 4.0, p, mvt_consistent_constant(p));
    const bool ok = !gamma_h.has_value() && corrected.has_value();
    return {"mean-value", ok,
            std::string("1/Gamma(alpha) constant: ") + (gamma_h ? "point" : "absent") +
                ", consistent constant: " + (corrected ? "point" : "absent")};
}

inline CheckResult check_integral_inversion() {
    const std::vector<RealFn> family = {
        [](double) { return 1.0; }, [](double x) { return x; }, [](double x) { return x * x; },
        [](double x) { return std::sin(x); }, [](double x) { return std::exp(x); }};
    double worst = 0.0;
    for (const auto& f : family)
        for (double alpha : {0.5, 0.75, 0.9}) {
            const auto p = OperatorParams::beta_equals_alpha(alpha);
            const RealFn integral = [&](double t) { return fractional_integral(f, p, t, 1e-14); };
            for (double t : {0.5, 1.0}) worst = std::max(worst, std::abs(gfd_limit(integral, p, t) - f(t)));
        }
    return {"integral-inversion", worst <= 1e-7, max_str(worst)};
}

inline CheckResult check_caputo_compat() {
    double worst = 0.0;
    const std::vector<ElementarySpec> specs = {
        {ElementaryKind::Exp, 1.0, 12}, {ElementaryKind::Sin, 2.0, 10}, {ElementaryKind::Cos, 1.5, 10}};
    for (const auto& spec : specs)
        for (double alpha : {0.3, 0.5, 0.8}) {
            const auto poly = taylor_expand(spec);
            const auto series = caputo_series_derivative(poly, FracOrder(alpha));
            const auto termwise = gfd_poly(poly, OperatorParams::beta_equals_exponent(alpha));
            for (double t : {0.4, 1.1}) {
                const double a = series.eval(t);
                worst = std::max(worst, std::abs(a - termwise.eval(t)) / std::max(1.0, std::abs(a)));
            }
        }
    return {"caputo-compat", worst <= 1e-12, max_str(worst)};
}

inline CheckResult check_table(TableId id, const VerifyOptions& o) {
    const auto report = reproduce_table(id, {o.table_tolerance, o.conformable_present});
    return {"table" + std::to_string(static_cast<int>(id)), report.passed(),
            max_str(report.max_deviation()) + " tol " + format_double("%.1e", report.tolerance)};
}

inline CheckResult check_figure(int id) {
    const auto spec = figure_spec(id);
    const auto data = error_curves(spec.problem, FracOrder(spec.alpha), 100);
    return {"figure" + std::to_string(id), data.ordering_holds(),
            std::to_string(data.records.size()) + " points, GFD error below CD error: " +
                (data.ordering_holds() ? "yes" : "no")};
}

inline double closed_vs_numeric(RiccatiKind kind, double alpha, int n_steps) {
    const auto problem = kind == RiccatiKind::Riccati1 ? problems::riccati1(alpha) : problems::riccati2(alpha);
    const auto curve = solve_numeric(problem, 1.0, n_steps);
    double worst = 0.0;
    for (const auto& s : curve.samples) {
        if (s.x < 1.0 / 64.0) continue;
        worst = std::max(worst, std::abs(s.y - riccati_closed(kind, s.x, problem.order, problem.shape)));
    }
    return worst;
}

inline CheckResult check_numeric_vs_closed() {
    const double w = std::max({closed_vs_numeric(RiccatiKind::Riccati1, 0.75, 4096),
                               closed_vs_numeric(RiccatiKind::Riccati1, 0.9, 4096),
                               closed_vs_numeric(RiccatiKind::Riccati2, 0.9, 4096)});
    return {"numeric-vs-closed", w <= 1e-6, max_str(w)};
}

inline CheckResult check_step_halving() {
    bool ok = true;
    std::string detail;
    for (int n = 16; n <= 256; n *= 2) {
        const double coarse = closed_vs_numeric(RiccatiKind::Riccati2, 0.9, n);
        const double fine = closed_vs_numeric(RiccatiKind::Riccati2, 0.9, 2 * n);
        if (fine > 1e-10 && coarse / fine < 8.0) ok = false;
        detail += format_double("%.1f", coarse / fine) + " ";
    }
    return {"step-halving", ok, "ratios " + detail};
}

inline CheckResult check_series(int which) {
    const auto problem = which == 1 ? problems::example1(1.0) : problems::example2();
    const auto curve = solve_numeric(problem, 1.0, 1024);
    double worst = 0.0;
    for (const auto& s : curve.samples) {
        if (s.x < 1.0 / 64.0) continue;
        const double series = which == 1 ? series_solution_ex1(1.0, s.x, 40).value : series_solution_ex2(s.x, 20).value;
        worst = std::max(worst, std::abs(series - s.y));
    }
    return {"series-example" + std::to_string(which), worst <= 1e-6, max_str(worst)};
}

}  // namespace detail

/// Runs every invariant check whose name contains options.filter.
inline VerifySummary run_verification_suite(const VerifyOptions& options = {}) {
    using Check = std::pair<std::string, std::function<CheckResult()>>;
    const std::vector<Check> all = {
        {"gamma-recurrence", detail::check_gamma_recurrence},
        {"limit-vs-closed", detail::check_limit_vs_closed},
        {"linearity", detail::check_linearity},
        {"composition", detail::check_composition},
        {"product-rule", [] { return detail::check_product_quotient(false); }},
        {"quotient-rule", [] { return detail::check_product_quotient(true); }},
        {"rolle", detail::check_rolle},
        {"mean-value", detail::check_mean_value},
        {"integral-inversion", detail::check_integral_inversion},
        {"caputo-compat", detail::check_caputo_compat},
        {"table1", [&] { return detail::check_table(TableId::Table1, options); }},
        {"table2", [&] { return detail::check_table(TableId::Table2, options); }},
        {"table3", [&] { return detail::check_table(TableId::Table3, options); }},
        {"figure1", [] { return detail::check_figure(1); }},
        {"figure2", [] { return detail::check_figure(2); }},
        {"figure3", [] { return detail::check_figure(3); }},
        {"numeric-vs-closed", detail::check_numeric_vs_closed},
        {"step-halving", detail::check_step_halving},
        {"series-example1", [] { return detail::check_series(1); }},
        {"series-example2", [] { return detail::check_series(2); }},
    };
    VerifySummary summary;
    for (const auto& [name, run] : all) {
        if (!options.filter.empty() && name.find(options.filter) == std::string::npos) continue;
        try {
            summary.checks.push_back(run());
        } catch (const std::exception& e) {
            summary.checks.push_back({name, false, std::string("exception: ") + e.what()});
        }
    }
    return summary;
}

}  // namespace gfd
