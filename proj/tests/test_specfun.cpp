#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gfd/specfun.hpp"

namespace {

// Independent ln Gamma: shift x up by recurrence until x + n >= 30, then the
// Stirling series with Bernoulli terms through B_20, all in long double.
long double stirling_ln_gamma(long double x) {
    long double shift = 0.0L;
    while (x < 30.0L) {
        shift += std::log(x);
        x += 1.0L;
    }
    static const long double b[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66,
                                    -691.0L / 2730, 7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330};
    long double series = 0.0L;
    long double xpow = x;
    for (int k = 1; k <= 10; ++k) {
        series += b[k - 1] / ((2.0L * k) * (2.0L * k - 1.0L) * xpow);
        xpow *= x * x;
    }
    const long double pi = 3.141592653589793238462643383279502884L;
    return (x - 0.5L) * std::log(x) - x + 0.5L * std::log(2.0L * pi) + series - shift;
}

}  // namespace

TEST(LnGamma, IntegerAnchors) {
    EXPECT_DOUBLE_EQ(gfd::ln_gamma(1.0), 0.0);
    EXPECT_DOUBLE_EQ(gfd::ln_gamma(2.0), 0.0);
    EXPECT_NEAR(gfd::ln_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LnGamma, ThreeQuarters) {
    // Gamma(3/4) = 1.2254167024651776451...
    EXPECT_NEAR(gfd::ln_gamma(0.75), std::log(1.2254167024651776451), 1e-15);
    EXPECT_NEAR(gfd::ln_gamma(0.75), static_cast<double>(stirling_ln_gamma(0.75L)), 1e-15);
}

TEST(LnGamma, RelativeAccuracyAgainstStirlingOracle) {
    double worst = 0.0;
    for (int i = 1; i <= 5000; ++i) {
        const double x = 50.0 * i / 5000.0 - 0.0037;  // avoids landing exactly on 1 and 2
        if (x <= 0.0) continue;
        const long double ref = stirling_ln_gamma(x);
        const double err = std::abs(static_cast<double>(gfd::ln_gamma(x) - ref));
        worst = std::max(worst, err / std::abs(static_cast<double>(ref)));
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(LnGamma, SmallArgumentsAndNearZeros) {
    for (double x : {1e-8, 1e-3, 0.01, 0.3, 0.4999, 0.9999, 1.0001, 1.26, 1.9999, 2.0001, 2.3})
        EXPECT_NEAR(gfd::ln_gamma(x), static_cast<double>(stirling_ln_gamma(x)),
                    1e-12 * std::abs(static_cast<double>(stirling_ln_gamma(x))))
            << "x = " << x;
}

TEST(LnGamma, AgreesWithStdLgamma) {
    for (double x = 0.05; x < 50.0; x += 0.37) EXPECT_NEAR(gfd::ln_gamma(x), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
}

TEST(LnGamma, RejectsNonPositive) {
    EXPECT_THROW(gfd::ln_gamma(0.0), std::domain_error);
    EXPECT_THROW(gfd::ln_gamma(-1.5), std::domain_error);
    EXPECT_THROW(gfd::ln_gamma(std::nan("")), std::domain_error);
}

TEST(LnGamma, RecurrenceProperty) {
    for (double x : {0.1, 0.5, 0.9, 1.5, 7.3}) {
        const double lhs = std::exp(gfd::ln_gamma(x + 1.0));
        const double rhs = x * std::exp(gfd::ln_gamma(x));
        EXPECT_NEAR(lhs / rhs, 1.0, 1e-12) << "x = " << x;
    }
}

TEST(Prefactor, Examples) {
    using gfd::FracOrder;
    using gfd::ShapeParam;
    EXPECT_DOUBLE_EQ(gfd::gfd_prefactor(FracOrder(1.0), ShapeParam(1.0)), 1.0);
    EXPECT_NEAR(gfd::gfd_prefactor(FracOrder(0.75), ShapeParam(0.75)), 1.2254167024651776451, 1e-14);
    // Gamma(2)/Gamma(5/2) with Gamma(5/2) = 3 sqrt(pi) / 4
    const double expected = 1.0 / (3.0 * std::sqrt(std::numbers::pi) / 4.0);
    EXPECT_NEAR(gfd::gfd_prefactor(FracOrder(0.5), ShapeParam(2.0)), expected, 1e-14);
    EXPECT_NEAR(expected, 0.7522528, 1e-7);
}

TEST(Prefactor, PositiveAndUnitAtAlphaOne) {
    for (double a = 0.01; a <= 1.0; a += 0.07)
        for (double b = 0.01; b < 20.0; b *= 1.7) {
            EXPECT_GT(gfd::gfd_prefactor(gfd::FracOrder(a), gfd::ShapeParam(b)), 0.0);
            EXPECT_NEAR(gfd::gfd_prefactor(gfd::FracOrder(1.0), gfd::ShapeParam(b)), 1.0, 1e-14);
        }
}

TEST(Params, Invariants) {
    EXPECT_THROW(gfd::FracOrder(0.0), std::domain_error);
    EXPECT_THROW(gfd::FracOrder(1.0001), std::domain_error);
    EXPECT_NO_THROW(gfd::FracOrder(1.0));
    EXPECT_THROW(gfd::ShapeParam(0.0), std::domain_error);
    EXPECT_THROW(gfd::ShapeParam(-0.5), std::domain_error);
}
