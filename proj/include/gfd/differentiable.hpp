#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfd/polynomial.hpp"

namespace gfd {

using RealFn = std::function<double(double)>;

/// A function on t > 0 paired with its classical first derivative.
///
/// The public constructor checks df against a central finite difference of f
/// at a few sample points and rejects the pair when they disagree by more
/// than 1e-6 relative.
class DifferentiableFn {
  public:
    static constexpr double default_samples[] = {0.37, 0.81, 1.23};
    static constexpr double derivative_check_tolerance = 1e-6;

    DifferentiableFn(RealFn f, RealFn df, std::span<const double> samples = default_samples)
        : f_(std::move(f)), df_(std::move(df)) {
        if (!f_ || !df_) throw std::invalid_argument("DifferentiableFn needs both f and df");
        for (double t : samples) check_derivative_at(t);
    }

    double operator()(double t) const { return f_(t); }
    double derivative(double t) const { return df_(t); }

    const RealFn& function() const noexcept { return f_; }
    const RealFn& derivative_function() const noexcept { return df_; }

    /// Builds a pair that is correct by construction (combinators, polynomials).
    static DifferentiableFn trusted(RealFn f, RealFn df) {
        return DifferentiableFn(std::move(f), std::move(df), TrustedTag{});
    }

  private:
    struct TrustedTag {};
    DifferentiableFn(RealFn f, RealFn df, TrustedTag) : f_(std::move(f)), df_(std::move(df)) {}

    void check_derivative_at(double t) const {
        const double h = 1e-5 * std::max(1.0, std::abs(t));
        const double fd = (f_(t + h) - f_(t - h)) / (2.0 * h);
        const double d = df_(t);
        if (!std::isfinite(fd) || !std::isfinite(d))
            throw std::invalid_argument("DifferentiableFn: non-finite value at sample t = " +
                                        std::to_string(t));
        if (std::abs(fd - d) > derivative_check_tolerance * std::max(1.0, std::abs(d)))
            throw std::invalid_argument("DifferentiableFn: df disagrees with finite difference at t = " +
                                        std::to_string(t));
    }

    RealFn f_;
    RealFn df_;
};

namespace fn {

inline DifferentiableFn constant(double c) {
    return DifferentiableFn::trusted([c](double) { return c; }, [](double) { return 0.0; });
}

inline DifferentiableFn power(double k, double c = 1.0) {
    return DifferentiableFn::trusted([k, c](double t) { return c * std::pow(t, k); },
                                     [k, c](double t) { return k == 0.0 ? 0.0 : c * k * std::pow(t, k - 1.0); });
}

inline DifferentiableFn exp(double rate = 1.0) {
    return DifferentiableFn::trusted([rate](double t) { return std::exp(rate * t); },
                                     [rate](double t) { return rate * std::exp(rate * t); });
}

inline DifferentiableFn sin(double omega = 1.0) {
    return DifferentiableFn::trusted([omega](double t) { return std::sin(omega * t); },
                                     [omega](double t) { return omega * std::cos(omega * t); });
}

inline DifferentiableFn cos(double omega = 1.0) {
    return DifferentiableFn::trusted([omega](double t) { return std::cos(omega * t); },
                                     [omega](double t) { return -omega * std::sin(omega * t); });
}

inline DifferentiableFn from_polynomial(GeneralizedPolynomial poly) {
    auto shared = std::make_shared<const GeneralizedPolynomial>(std::move(poly));
    return DifferentiableFn::trusted([shared](double t) { return shared->eval(t); },
                                     [shared](double t) { return shared->eval_derivative(t); });
}

inline DifferentiableFn sum(const DifferentiableFn& f, const DifferentiableFn& g, double a = 1.0,
                            double b = 1.0) {
    return DifferentiableFn::trusted([=](double t) { return a * f(t) + b * g(t); },
                                     [=](double t) { return a * f.derivative(t) + b * g.derivative(t); });
}

inline DifferentiableFn product(const DifferentiableFn& f, const DifferentiableFn& g) {
    return DifferentiableFn::trusted([=](double t) { return f(t) * g(t); },
                                     [=](double t) { return f.derivative(t) * g(t) + f(t) * g.derivative(t); });
}

inline DifferentiableFn quotient(const DifferentiableFn& f, const DifferentiableFn& g) {
    return DifferentiableFn::trusted([=](double t) { return f(t) / g(t); },
                                     [=](double t) {
                                         const double gt = g(t);
                                         return (f.derivative(t) * gt - f(t) * g.derivative(t)) / (gt * gt);
                                     });
}

}  // namespace fn
}  // namespace gfd
