#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gfd {

/// Fractional order alpha of the operator, 0 < alpha <= 1.
class FracOrder {
  public:
    explicit FracOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0 && alpha <= 1.0))
            throw std::domain_error("fractional order must satisfy 0 < alpha <= 1, got " +
                                    std::to_string(alpha));
    }
    double value() const noexcept { return alpha_; }

  private:
    double alpha_;
};

/// Shape parameter beta of the gamma prefactor, beta > 0.
class ShapeParam {
  public:
    explicit ShapeParam(double beta) : beta_(beta) {
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw std::domain_error("shape parameter must satisfy beta > 0, got " +
                                    std::to_string(beta));
    }
    double value() const noexcept { return beta_; }

  private:
    double beta_;
};

namespace detail {

// zeta(k) - 1 for k = 2..32
inline constexpr std::array<double, 31> zeta_minus_one = {
    0.644934066848226436472,     0.2020569031595942854,       0.082323233711138191516,
    0.0369277551433699263314,    0.0173430619844491397145,    0.0083492773819228268398,
    0.00407735619794433937869,   0.00200839282608221441785,   0.000994575127818085337146,
    0.000494188604119464558702,  0.000246086553308048298638,  0.000122713347578489146752,
    0.0000612481350587048292585, 0.0000305882363070204935517, 0.0000152822594086518717326,
    0.0000076371976378997622736, 0.00000381729326499983985646, 0.00000190821271655393892566,
    9.53962033872796113152e-7,   4.76932986787806463117e-7,   2.38450502727732990004e-7,
    1.19219925965311073068e-7,   5.96081890512594796124e-8,   2.98035035146522801861e-8,
    1.49015548283650412347e-8,   7.45071178983542949198e-9,   3.72533402478845705482e-9,
    1.8626597235130490064e-9,    9.31327432419668182872e-10,  4.65662906503378407299e-10,
    2.328311833676505492e-10,
};

inline constexpr double euler_gamma = 0.577215664901532860607;

// ln Gamma(1 + z), |z| <= 1/4.
inline double ln_gamma_1p(double z) {
    double sum = 0.0;
    double zk = -z;  // (-z)^k
    for (std::size_t i = 0; i < zeta_minus_one.size(); ++i) {
        zk *= -z;
        const int k = static_cast<int>(i) + 2;
        sum += (1.0 + zeta_minus_one[i]) * zk / k;
    }
    return -euler_gamma * z + sum;
}

// ln Gamma(2 + z), |z| <= 1/4.
inline double ln_gamma_2p(double z) {
    double sum = 0.0;
    double zk = -z;
    for (std::size_t i = 0; i < zeta_minus_one.size(); ++i) {
        zk *= -z;
        const int k = static_cast<int>(i) + 2;
        sum += zeta_minus_one[i] * zk / k;
    }
    return (1.0 - euler_gamma) * z + sum;
}

// Lanczos approximation, g = 7, n = 9. Valid for x >= 1/2.
inline double ln_gamma_lanczos(double x) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    constexpr double g = 7.0;
    const double xm1 = x - 1.0;
    double series = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) series += c[i] / (xm1 + static_cast<double>(i));
    const double t = xm1 + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
           std::log(series);
}

}  // namespace detail

/// Natural log of the gamma function for x > 0.
///
/// Near the zeros of ln Gamma at x = 1 and x = 2 a zeta-coefficient Taylor
/// series is used so that relative accuracy holds there as well; elsewhere a
/// Lanczos sum, with reflection below 1/2.
inline double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("ln_gamma requires a finite positive argument, got " +
                                std::to_string(x));
    if (std::abs(x - 1.0) <= 0.25) return detail::ln_gamma_1p(x - 1.0);
    if (std::abs(x - 2.0) <= 0.25) return detail::ln_gamma_2p(x - 2.0);
    if (x < 0.5) {
        // Gamma(x) Gamma(1 - x) = pi / sin(pi x), with sin(pi x) > 0 on (0, 1/2)
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
               detail::ln_gamma_lanczos(1.0 - x);
    }
    return detail::ln_gamma_lanczos(x);
}

/// Gamma(x) for x > 0.
inline double gamma_fn(double x) { return std::exp(ln_gamma(x)); }

/// Gamma(num) / Gamma(den) for positive arguments, evaluated in log space.
inline double gamma_ratio(double num, double den) { return std::exp(ln_gamma(num) - ln_gamma(den)); }

/// Prefactor A = Gamma(beta) / Gamma(beta - alpha + 1) of the generalized
/// fractional derivative. Always positive since beta - alpha + 1 > 0.
inline double gfd_prefactor(FracOrder order, ShapeParam shape) {
    const double a = order.value();
    const double b = shape.value();
    if (a == 1.0) return 1.0;
    return gamma_ratio(b, b - a + 1.0);
}

}  // namespace gfd
