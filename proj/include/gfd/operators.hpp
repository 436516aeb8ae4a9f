#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gfd/differentiable.hpp"
#include "gfd/polynomial.hpp"
#include "gfd/specfun.hpp"

namespace gfd {

/// How beta is chosen when the operator is applied.
///
/// FixedBeta uses an explicit shape value. BetaEqualsAlpha is the convention
/// used when solving differential equations. BetaEqualsExponent picks
/// beta = k for every monomial t^k, which reproduces the Caputo power rule;
/// it only makes sense for generalized polynomials.
enum class BetaStrategy { FixedBeta, BetaEqualsAlpha, BetaEqualsExponent };

struct OperatorParams {
    FracOrder order;
    std::optional<ShapeParam> shape;
    BetaStrategy strategy;

    static OperatorParams fixed(double alpha, double beta) {
        return {FracOrder(alpha), ShapeParam(beta), BetaStrategy::FixedBeta};
    }
    static OperatorParams beta_equals_alpha(double alpha) {
        return {FracOrder(alpha), ShapeParam(alpha), BetaStrategy::BetaEqualsAlpha};
    }
    static OperatorParams beta_equals_exponent(double alpha) {
        return {FracOrder(alpha), std::nullopt, BetaStrategy::BetaEqualsExponent};
    }

    double alpha() const noexcept { return order.value(); }

    /// A(alpha, beta) for strategies with a single beta.
    double prefactor() const {
        switch (strategy) {
            case BetaStrategy::FixedBeta:
                if (!shape) throw std::invalid_argument("FixedBeta requires an explicit shape value");
                return gfd_prefactor(order, *shape);
            case BetaStrategy::BetaEqualsAlpha:
                return gfd_prefactor(order, ShapeParam(order.value()));
            case BetaStrategy::BetaEqualsExponent:
                break;
        }
        throw std::invalid_argument("BetaEqualsExponent is only defined for generalized polynomial inputs");
    }
};

class SearchFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A(alpha, beta) * t^(1 - alpha) * f'(t).
inline double gfd_closed(const DifferentiableFn& fn, const OperatorParams& p, double t) {
    if (!(t > 0.0)) throw std::domain_error("gfd_closed requires t > 0");
    return p.prefactor() * std::pow(t, 1.0 - p.alpha()) * fn.derivative(t);
}

/// Numerical evaluation of the defining limit
///   lim_{eps->0} [f(t + A eps t^(1-alpha)) - f(t)] / eps
/// using symmetric quotients at three step sizes and two Richardson passes.
inline double gfd_limit(const RealFn& f, const OperatorParams& p, double t) {
    if (!(t > 0.0)) throw std::domain_error("gfd_limit requires t > 0");
    const double scale = p.prefactor() * std::pow(t, 1.0 - p.alpha());
    const double h0 = std::min(1e-4 * std::max(1.0, t), 0.25 * t);
    std::array<double, 3> q{};
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double h = h0 / static_cast<double>(1u << i);
        const double eps = h / scale;
        q[i] = (f(t + scale * eps) - f(t - scale * eps)) / (2.0 * eps);
    }
    const double r0 = (4.0 * q[1] - q[0]) / 3.0;
    const double r1 = (4.0 * q[2] - q[1]) / 3.0;
    return (16.0 * r1 - r0) / 15.0;
}

inline double gfd_limit(const DifferentiableFn& fn, const OperatorParams& p, double t) {
    return gfd_limit(fn.function(), p, t);
}

struct ZeroLimit {
    bool diverges;
    double value;  // meaningful only when !diverges
};

/// Right limit of the operator at t = 0, estimated on t = 2^-j.
inline ZeroLimit gfd_at_zero(const DifferentiableFn& fn, const OperatorParams& p) {
    constexpr int j_first = 30;
    constexpr int j_last = 50;
    std::vector<double> v;
    for (int j = j_first; j <= j_last; ++j) {
        const double value = gfd_closed(fn, p, std::ldexp(1.0, -j));
        if (!std::isfinite(value)) return {true, 0.0};
        v.push_back(value);
    }
    const std::size_t n = v.size();
    const double d1 = v[n - 2] - v[n - 3];
    const double d2 = v[n - 1] - v[n - 2];
    const double last = v[n - 1];
    if (std::abs(d2) <= 1e-12 * std::max(1.0, std::abs(last))) return {false, last};
    const double ratio = d2 / d1;
    if (std::abs(d1) > 0.0 && std::abs(ratio) < 0.999) {
        const double limit = last + d2 * ratio / (1.0 - ratio);
        return {false, std::abs(limit) < 1e-14 * std::max(1.0, std::abs(v.front())) ? 0.0 : limit};
    }
    return {true, 0.0};
}

/// Operator applied to t^k: returns (coefficient, exponent) of the image.
///
/// For a single-beta strategy this is k A(alpha, beta) t^(k - alpha). Under
/// BetaEqualsExponent beta = k, so the coefficient becomes
/// Gamma(k + 1) / Gamma(k - alpha + 1). A constant (k = 0) maps to zero.
inline std::pair<double, double> gfd_monomial(double k, const OperatorParams& p) {
    if (!(k > -1.0)) throw std::domain_error("monomial exponent must exceed -1");
    const double alpha = p.alpha();
    if (k == 0.0) return {0.0, -alpha};
    if (p.strategy == BetaStrategy::BetaEqualsExponent) {
        if (k < 0.0) throw std::domain_error("BetaEqualsExponent needs k > 0 so that beta = k is admissible");
        return {gamma_ratio(k + 1.0, k - alpha + 1.0), k - alpha};
    }
    return {k * p.prefactor(), k - alpha};
}

/// Termwise operator image of a generalized polynomial.
inline GeneralizedPolynomial gfd_poly(const GeneralizedPolynomial& poly, const OperatorParams& p) {
    std::vector<Term> out;
    for (const auto& [c, k] : poly.terms()) {
        const auto [m, e] = gfd_monomial(k, p);
        if (m == 0.0) continue;
        out.push_back({c * m, e});
    }
    return GeneralizedPolynomial(std::move(out));
}

namespace detail {

// c t^k -> c Gamma(k+1)/Gamma(k-order+1) t^(k-order); constants vanish.
inline GeneralizedPolynomial power_rule(const GeneralizedPolynomial& poly, double order) {
    std::vector<Term> out;
    for (const auto& [c, k] : poly.terms()) {
        if (std::abs(k) <= exponent_merge_tolerance) continue;
        if (!(k - order > -1.0))
            throw std::domain_error("exponent underflow: " + std::to_string(k) + " - " +
                                    std::to_string(order) + " <= -1");
        out.push_back({c * gamma_ratio(k + 1.0, k - order + 1.0), k - order});
    }
    return GeneralizedPolynomial(std::move(out));
}

}  // namespace detail

/// Caputo-matching series derivative; input exponents must be >= 0.
inline GeneralizedPolynomial caputo_series_derivative(const GeneralizedPolynomial& poly, FracOrder order) {
    for (const auto& term : poly.terms())
        if (term.exponent < 0.0)
            throw std::domain_error("caputo_series_derivative requires non-negative exponents");
    return detail::power_rule(poly, order.value());
}

struct CompositionSides {
    GeneralizedPolynomial lhs;  // D^a1 D^a2 f
    GeneralizedPolynomial rhs;  // D^(a1+a2) f
};

/// Both sides of the index law D^a1 D^a2 f = D^(a1+a2) f on a series.
/// Intermediate exponents may drop below zero as long as they stay above -1.
inline CompositionSides compose_check(const GeneralizedPolynomial& poly, FracOrder a1, FracOrder a2) {
    for (const auto& term : poly.terms())
        if (term.exponent < 0.0) throw std::domain_error("compose_check requires non-negative exponents");
    auto inner = detail::power_rule(poly, a2.value());
    return {detail::power_rule(inner, a1.value()), detail::power_rule(poly, a1.value() + a2.value())};
}

struct RuleResidual {
    double lhs;
    double rhs;
    double residual() const { return std::abs(lhs - rhs); }
};

/// D(fg) against f D(g) + g D(f) at t.
inline RuleResidual product_rule_residual(const DifferentiableFn& f, const DifferentiableFn& g,
                                          const OperatorParams& p, double t) {
    const double lhs = gfd_closed(fn::product(f, g), p, t);
    const double rhs = f(t) * gfd_closed(g, p, t) + g(t) * gfd_closed(f, p, t);
    return {lhs, rhs};
}

/// D(f/g) against (g D(f) - f D(g)) / g^2 at t.
inline RuleResidual quotient_rule_residual(const DifferentiableFn& f, const DifferentiableFn& g,
                                           const OperatorParams& p, double t) {
    const double gt = g(t);
    if (gt == 0.0) throw std::domain_error("quotient rule: g(t) = 0");
    const double lhs = gfd_closed(fn::quotient(f, g), p, t);
    const double rhs = (gt * gfd_closed(f, p, t) - f(t) * gfd_closed(g, p, t)) / (gt * gt);
    return {lhs, rhs};
}

/// (1/A) * integral_0^t f(x) x^(alpha-1) dx.
///
/// With u = x^alpha the kernel becomes the constant 1/alpha, so the integral
/// is (1/(alpha A)) * integral_0^(t^alpha) f(u^(1/alpha)) du, evaluated by
/// adaptive Gauss-Kronrod. `rel_tol` is floored at a few ulps.
inline double fractional_integral(const RealFn& f, const OperatorParams& p, double t,
                                  double rel_tol = 1e-10) {
    if (!(t > 0.0)) throw std::domain_error("fractional_integral requires t > 0");
    const double alpha = p.alpha();
    const double a = p.prefactor();
    const double inv_alpha = 1.0 / alpha;
    auto integrand = [&](double u) {
        const double x = std::pow(u, inv_alpha);
        const double v = f(x);
        if (!std::isfinite(v))
            throw std::runtime_error("fractional_integral: non-finite integrand at x = " + std::to_string(x));
        return v;
    };
    const double upper = std::pow(t, alpha);
    double error = 0.0;
    double l1 = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(
        integrand, 0.0, upper, 15, std::max(rel_tol, 8.0 * std::numeric_limits<double>::epsilon()), &error, &l1);
    return integral / (alpha * a);
}

/// Closed-form fractional integral of a generalized polynomial.
inline GeneralizedPolynomial fractional_integral_poly(const GeneralizedPolynomial& poly,
                                                      const OperatorParams& p) {
    const double alpha = p.alpha();
    const double a = p.prefactor();
    std::vector<Term> out;
    for (const auto& [c, k] : poly.terms()) out.push_back({c / (a * (k + alpha)), k + alpha});
    return GeneralizedPolynomial(std::move(out));
}

namespace detail {

// Bisects g on [lo, hi] (sign change assumed) down to width `width`.
template <class G>
double bisect(const G& g, double lo, double hi, double width) {
    double glo = g(lo);
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline constexpr int scan_points = 2048;

}  // namespace detail

/// Point c in (a, b) where the operator vanishes, given f(a) = f(b).
///
/// A t^(1-alpha) is positive for t > 0, so the zero is located by bisection on
/// a sign change of D f, first found by a uniform scan.
inline double rolle_point(const DifferentiableFn& fn, double a, double b, const OperatorParams& p) {
    if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("rolle_point requires 0 < a < b");
    const double fa = fn(a);
    const double fb = fn(b);
    if (std::abs(fa - fb) > 1e-12 * std::max(1.0, std::abs(fa)))
        throw std::invalid_argument("rolle_point requires f(a) = f(b)");
    auto d = [&](double t) { return gfd_closed(fn, p, t); };
    const double step = (b - a) / detail::scan_points;
    double prev_t = a;
    double prev = d(a);
    for (int i = 1; i <= detail::scan_points; ++i) {
        const double t = (i == detail::scan_points) ? b : a + i * step;
        const double cur = d(t);
        if (cur == 0.0 && t < b) return t;
        if (prev != 0.0 && (cur < 0.0) != (prev < 0.0) && cur != 0.0)
            return detail::bisect(d, prev_t, t, 1e-12 * (b - a));
        prev_t = t;
        prev = cur;
    }
    throw SearchFailure("rolle_point: no sign change of the derivative on [a, b]");
}

/// Constant h for which the mean value identity holds exactly on t^alpha.
inline double mvt_consistent_constant(const OperatorParams& p) { return 1.0 / (p.alpha() * p.prefactor()); }

/// Constant h = 1 / Gamma(alpha), the default for mvt_search. Fails on t over [1, 4] at alpha = 1/2.
inline double mvt_gamma_constant(const OperatorParams& p) { return 1.0 / gamma_fn(p.alpha()); }

/// Searches [a, b] for c with D f(c) = (f(b) - f(a)) / (h (b^alpha - a^alpha)).
/// Returns nullopt when no such point exists.
inline std::optional<double> mvt_search(const DifferentiableFn& fn, double a, double b, const OperatorParams& p,
                                        std::optional<double> h = std::nullopt) {
    if (!(a > 0.0) || !(b > a)) throw std::invalid_argument("mvt_search requires 0 < a < b");
    const double hc = h.value_or(mvt_gamma_constant(p));
    if (!(hc > 0.0)) throw std::invalid_argument("mvt_search requires h > 0");
    const double alpha = p.alpha();
    const double target = (fn(b) - fn(a)) / (hc * (std::pow(b, alpha) - std::pow(a, alpha)));
    const double tol = 1e-8 * std::max(1.0, std::abs(target));
    auto g = [&](double t) { return gfd_closed(fn, p, t) - target; };
    const double step = (b - a) / detail::scan_points;
    double prev_t = a;
    double prev = g(a);
    if (std::abs(prev) <= tol) return a;
    for (int i = 1; i <= detail::scan_points; ++i) {
        const double t = (i == detail::scan_points) ? b : a + i * step;
        const double cur = g(t);
        if (std::abs(cur) <= tol) return t;
        if ((cur < 0.0) != (prev < 0.0)) return detail::bisect(g, prev_t, t, 1e-12 * (b - a));
        prev_t = t;
        prev = cur;
    }
    return std::nullopt;
}

}  // namespace gfd
