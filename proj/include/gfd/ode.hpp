#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfd/specfun.hpp"

namespace gfd {

using OdeRhs = std::function<double(double x, double y)>;

enum class ProblemLabel { Example1, Example2, Example3, Example4, Riccati1, Riccati2, Custom };

/// How the fractional operator in a problem is read.
///
/// LocalGfd uses a single beta, so the problem is equivalent to a classical
/// ODE. CaputoMatched takes beta equal to each series exponent, which is the
/// Caputo reading; it is only supported for forcing terms independent of y.
enum class Formulation { LocalGfd, CaputoMatched };

/// D^alpha y = rhs(x, y), y(0) = y0.
struct GfdProblem {
    OdeRhs rhs;
    FracOrder order;
    ShapeParam shape;
    double y0 = 0.0;
    ProblemLabel label = ProblemLabel::Custom;
    Formulation formulation = Formulation::LocalGfd;
};

namespace problems {

/// D^alpha y + y^2 = 1.
inline GfdProblem riccati1(double alpha) {
    return {[](double, double y) { return 1.0 - y * y; }, FracOrder(alpha), ShapeParam(alpha), 0.0,
            ProblemLabel::Riccati1};
}

/// D^alpha y = 2y - y^2 + 1.
inline GfdProblem riccati2(double alpha) {
    return {[](double, double y) { return 2.0 * y - y * y + 1.0; }, FracOrder(alpha), ShapeParam(alpha),
            0.0, ProblemLabel::Riccati2};
}

/// D^(1/2) y = e^(kx), read termwise in the Caputo sense.
inline GfdProblem example1(double k = 1.0) {
    return {[k](double x, double) { return std::exp(k * x); }, FracOrder(0.5), ShapeParam(0.5), 0.0,
            ProblemLabel::Example1, Formulation::CaputoMatched};
}

/// D^(1/2) y = x^2 sin x, read termwise in the Caputo sense.
inline GfdProblem example2() {
    return {[](double x, double) { return x * x * std::sin(x); }, FracOrder(0.5), ShapeParam(0.5), 0.0,
            ProblemLabel::Example2, Formulation::CaputoMatched};
}

/// D^(1/2) y + y = x^2 + 2/Gamma(5/2) x^(3/2), alpha = beta = 1/2.
inline GfdProblem example3(double y0 = 0.0) {
    const double c = 2.0 / gamma_fn(2.5);
    return {[c](double x, double y) { return x * x + c * std::pow(x, 1.5) - y; }, FracOrder(0.5),
            ShapeParam(0.5), y0, ProblemLabel::Example3};
}

/// d/dx[(1 - sqrt x)(y + 1)] + lambda D^(1/2) y = 0, alpha = beta = 1/2.
///
/// Expanding the product and solving for the operator gives
///   D^(1/2) y = A (y + 1) / (2 (1 - sqrt x + lambda A sqrt x)),  A = sqrt(pi).
inline GfdProblem example4(double lambda, double y0 = 0.0) {
    const double a = std::sqrt(std::numbers::pi);
    return {[a, lambda](double x, double y) {
                const double s = std::sqrt(x);
                return a * (y + 1.0) / (2.0 * (1.0 - s + lambda * a * s));
            },
            FracOrder(0.5), ShapeParam(0.5), y0, ProblemLabel::Example4};
}

}  // namespace problems

/// Classical form of a LocalGfd problem.
///
/// dydx is (1/A) x^(alpha-1) f(x, y). dydu is the same equation after
/// u = x^alpha: (1/(alpha A)) f(u^(1/alpha), y), which stays bounded at 0.
struct ClassicalIvp {
    double alpha;
    double prefactor;
    double y0;
    OdeRhs dydx;
    OdeRhs dydu;
};

inline ClassicalIvp transform_to_classical(const GfdProblem& p) {
    const double alpha = p.order.value();
    const double a = gfd_prefactor(p.order, p.shape);
    OdeRhs f = p.rhs;
    OdeRhs dydx = [=](double x, double y) { return std::pow(x, alpha - 1.0) * f(x, y) / a; };
    OdeRhs dydu = [=](double u, double y) { return f(std::pow(u, 1.0 / alpha), y) / (alpha * a); };
    return {alpha, a, p.y0, std::move(dydx), std::move(dydu)};
}

/// One classical fourth-order Runge-Kutta step.
template <class F>
double rk4_step(const F& f, double s, double y, double h) {
    const double k1 = f(s, y);
    const double k2 = f(s + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = f(s + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = f(s + h, y + h * k3);
    return y + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
}

enum class SolutionMethod { ClosedForm, Series, NumericRK };

struct Sample {
    double x;
    double y;
};

struct SolutionCurve {
    std::vector<Sample> samples;
    SolutionMethod method;
    int series_terms = 0;
};

class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(const std::string& what, double last_valid_x)
        : std::runtime_error(what), last_valid_x_(last_valid_x) {}
    double last_valid_x() const noexcept { return last_valid_x_; }

  private:
    double last_valid_x_;
};

namespace detail {

inline SolutionCurve solve_local(const GfdProblem& p, double x_end, int n_steps) {
    const ClassicalIvp ivp = transform_to_classical(p);
    const double inv_alpha = 1.0 / ivp.alpha;
    const double u_end = std::pow(x_end, ivp.alpha);
    const double h = u_end / n_steps;
    SolutionCurve curve{{}, SolutionMethod::NumericRK};
    curve.samples.reserve(static_cast<std::size_t>(n_steps) + 1);
    curve.samples.push_back({0.0, ivp.y0});
    double y = ivp.y0;
    for (int i = 0; i < n_steps; ++i) {
        const double u = i * h;
        y = rk4_step(ivp.dydu, u, y, h);
        const double x = (i + 1 == n_steps) ? x_end : std::pow((i + 1) * h, inv_alpha);
        if (!std::isfinite(y))
            throw DivergenceError("solve_numeric: non-finite state", curve.samples.back().x);
        curve.samples.push_back({x, y});
    }
    return curve;
}

// y(x) = y0 + (1/Gamma(alpha)) int_0^x (x - s)^(alpha - 1) f(s) ds
//      = y0 + (1/(alpha Gamma(alpha))) int_0^(x^alpha) f(x - v^(1/alpha)) dv
// with the v-integral carried out by the same RK4 stepper.
inline SolutionCurve solve_caputo_forcing(const GfdProblem& p, double x_end, int n_steps) {
    const double alpha = p.order.value();
    const double inv_alpha = 1.0 / alpha;
    const double scale = 1.0 / (alpha * gamma_fn(alpha));
    const double u_end = std::pow(x_end, alpha);
    const double h = u_end / n_steps;
    SolutionCurve curve{{}, SolutionMethod::NumericRK};
    curve.samples.reserve(static_cast<std::size_t>(n_steps) + 1);
    curve.samples.push_back({0.0, p.y0});
    for (int i = 1; i <= n_steps; ++i) {
        const double x = (i == n_steps) ? x_end : std::pow(i * h, inv_alpha);
        const double v_end = std::pow(x, alpha);
        const int steps = std::max(16, i);
        const double dv = v_end / steps;
        auto integrand = [&](double v, double) {
            return p.rhs(std::max(0.0, x - std::pow(v, inv_alpha)), 0.0);
        };
        double acc = 0.0;
        for (int j = 0; j < steps; ++j) acc = rk4_step(integrand, j * dv, acc, dv);
        const double y = p.y0 + scale * acc;
        if (!std::isfinite(y))
            throw DivergenceError("solve_numeric: non-finite state", curve.samples.back().x);
        curve.samples.push_back({x, y});
    }
    return curve;
}

}  // namespace detail

/// Fixed-step RK4 solution on [0, x_end] with n_steps uniform steps in
/// u = x^alpha. Samples are reported in x.
inline SolutionCurve solve_numeric(const GfdProblem& p, double x_end, int n_steps) {
    if (n_steps < 16) throw std::invalid_argument("solve_numeric requires n_steps >= 16");
    if (!(x_end > 0.0)) throw std::invalid_argument("solve_numeric requires x_end > 0");
    if (p.formulation == Formulation::CaputoMatched) return detail::solve_caputo_forcing(p, x_end, n_steps);
    return detail::solve_local(p, x_end, n_steps);
}

enum class RiccatiKind { Riccati1, Riccati2 };

namespace detail {

// Solutions of the two Riccati problems as functions of s = x^alpha / (alpha A).
inline double riccati_in_s(RiccatiKind kind, double s) {
    if (kind == RiccatiKind::Riccati1) return std::tanh(s);
    const double r2 = std::numbers::sqrt2;
    return 1.0 + r2 * std::tanh(r2 * s - std::log(1.0 + r2));
}

inline double riccati_with_prefactor(RiccatiKind kind, double x, double alpha, double a) {
    if (x < 0.0) throw std::domain_error("Riccati closed form requires x >= 0");
    return riccati_in_s(kind, std::pow(x, alpha) / (alpha * a));
}

}  // namespace detail

/// tanh(x^alpha / (alpha A)), the solution of D^alpha y + y^2 = 1, y(0) = 0.
inline double riccati1_closed(double x, FracOrder order, ShapeParam shape) {
    return detail::riccati_with_prefactor(RiccatiKind::Riccati1, x, order.value(), gfd_prefactor(order, shape));
}

/// 1 + sqrt2 tanh(sqrt2 x^alpha / (alpha A) - ln(1 + sqrt2)), the solution of
/// D^alpha y = 2y - y^2 + 1, y(0) = 0.
inline double riccati2_closed(double x, FracOrder order, ShapeParam shape) {
    return detail::riccati_with_prefactor(RiccatiKind::Riccati2, x, order.value(), gfd_prefactor(order, shape));
}

inline double riccati_closed(RiccatiKind kind, double x, FracOrder order, ShapeParam shape) {
    return kind == RiccatiKind::Riccati1 ? riccati1_closed(x, order, shape) : riccati2_closed(x, order, shape);
}

/// Conformable-derivative solution: same closed forms with A = 1.
inline double conformable_closed(RiccatiKind kind, double x, FracOrder order) {
    return detail::riccati_with_prefactor(kind, x, order.value(), 1.0);
}

/// Classical (alpha = 1) solutions.
inline double exact_alpha1(RiccatiKind kind, double x) {
    return detail::riccati_with_prefactor(kind, x, 1.0, 1.0);
}

struct SeriesValue {
    double value;
    double tail_bound;  // magnitude of the first omitted term
};

/// sum_{n<N} k^n x^(n+1/2) / Gamma(n + 3/2).
inline SeriesValue series_solution_ex1(double k, double x, int n_terms = 40) {
    if (n_terms < 1) throw std::invalid_argument("series needs at least one term");
    if (x < 0.0) throw std::domain_error("series solution requires x >= 0");
    if (x == 0.0) return {0.0, 0.0};
    auto term = [&](int n) {
        const double mag = std::exp((n + 0.5) * std::log(x) - ln_gamma(n + 1.5));
        return std::pow(k, n) * mag;
    };
    double sum = 0.0;
    for (int n = 0; n < n_terms; ++n) sum += term(n);
    return {sum, std::abs(term(n_terms))};
}

/// sum_{n<N} (-1)^n (2n+3)(2n+2) x^(2n+7/2) / Gamma(2n + 9/2).
inline SeriesValue series_solution_ex2(double x, int n_terms = 20) {
    if (n_terms < 1) throw std::invalid_argument("series needs at least one term");
    if (x < 0.0) throw std::domain_error("series solution requires x >= 0");
    if (x == 0.0) return {0.0, 0.0};
    auto term = [&](int n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        const double poly = (2.0 * n + 3.0) * (2.0 * n + 2.0);
        return sign * poly * std::exp((2.0 * n + 3.5) * std::log(x) - ln_gamma(2.0 * n + 4.5));
    };
    double sum = 0.0;
    for (int n = 0; n < n_terms; ++n) sum += term(n);
    return {sum, std::abs(term(n_terms))};
}

enum class DerivativeKind { GFD, CD };

struct ErrorPoint {
    double x;
    double error;
};

struct ErrorCurve {
    std::vector<ErrorPoint> points;
    std::vector<double> excluded;  // grid points where the alpha = 1 solution vanishes
};

/// |y_method(x) - y_exact(x)| / |y_exact(x)| against the alpha = 1 solution,
/// with beta = alpha for the GFD curve.
inline ErrorCurve abs_rel_error_curve(RiccatiKind kind, DerivativeKind method, FracOrder order,
                                      const std::vector<double>& grid) {
    ErrorCurve curve;
    curve.points.reserve(grid.size());
    for (double x : grid) {
        if (!(x > 0.0)) throw std::domain_error("error curve grid points must be > 0");
        const double exact = exact_alpha1(kind, x);
        if (exact == 0.0) {
            curve.excluded.push_back(x);
            continue;
        }
        const double y = method == DerivativeKind::GFD
                             ? riccati_closed(kind, x, order, ShapeParam(order.value()))
                             : conformable_closed(kind, x, order);
        curve.points.push_back({x, std::abs(y - exact) / std::abs(exact)});
    }
    return curve;
}

/// n uniform points i/n * x_end, i = 1..n.
inline std::vector<double> uniform_grid(int n, double x_end = 1.0) {
    if (n < 1) throw std::invalid_argument("grid needs at least one point");
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) g[static_cast<std::size_t>(i - 1)] = x_end * i / n;
    return g;
}

}  // namespace gfd
