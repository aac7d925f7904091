#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"

namespace gausscop {
namespace {

// Explicit sum  He_k(x) = sum_i k! / (i! (k-2i)!) (-1/2)^i x^(k-2i).
double hermite_explicit(unsigned k, double x) {
    double sum = 0.0;
    for (unsigned i = 0; 2 * i <= k; ++i) {
        const double coef = std::tgamma(k + 1.0) / (std::tgamma(i + 1.0) * std::tgamma(k - 2.0 * i + 1.0));
        sum += coef * std::pow(-0.5, i) * std::pow(x, k - 2 * i);
    }
    return sum;
}

TEST(NormPdf, KnownValues) {
    EXPECT_DOUBLE_EQ(norm_pdf(0.0), 0.3989422804014327);
    EXPECT_NEAR(norm_pdf(1.0), 0.24197072451914337, 1e-17);
    for (double x : {0.3, 1.7, 5.0, 12.0}) EXPECT_EQ(norm_pdf(x), norm_pdf(-x));
}

TEST(NormCdf, KnownValuesAndLimits) {
    EXPECT_EQ(norm_cdf(0.0), 0.5);
    EXPECT_EQ(norm_cdf(std::numeric_limits<double>::infinity()), 1.0);
    EXPECT_EQ(norm_cdf(-std::numeric_limits<double>::infinity()), 0.0);
    EXPECT_NEAR(norm_cdf(1.0), 0.8413447460685429, 1e-15);
}

TEST(NormCdf, TailKeepsRelativeAccuracy) {
    // Phi(-10) = 7.6198530241605260e-24
    EXPECT_NEAR(norm_cdf(-10.0) / 7.6198530241605260e-24, 1.0, 1e-13);
    EXPECT_NEAR(norm_sf(10.0) / 7.6198530241605260e-24, 1.0, 1e-13);
}

TEST(NormCdf, DerivativeIsDensity) {
    const double step = 1e-5;
    for (double x = -8.0; x <= 8.0; x += 0.25) {
        const double fd = (norm_cdf(x + step) - norm_cdf(x - step)) / (2.0 * step);
        EXPECT_NEAR(fd, norm_pdf(x), 1e-8) << x;
    }
}

TEST(NormQuantile, KnownValues) {
    EXPECT_EQ(norm_quantile(0.5), 0.0);
    EXPECT_NEAR(norm_quantile(0.8413447460685429), 1.0, 1e-14);
    EXPECT_NEAR(norm_quantile(0.25), -0.6744897501960817, 1e-15);
    EXPECT_EQ(norm_quantile(0.0), -std::numeric_limits<double>::infinity());
    EXPECT_EQ(norm_quantile(1.0), std::numeric_limits<double>::infinity());
}

TEST(NormQuantile, RejectsOutsideUnitInterval) {
    EXPECT_THROW(norm_quantile(-0.1), DomainError);
    EXPECT_THROW(norm_quantile(1.5), DomainError);
    EXPECT_THROW(norm_quantile(std::nan("")), DomainError);
}

TEST(NormQuantile, RoundTripProperty) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const double p = unit(rng);
        if (p == 0.0) continue;
        EXPECT_LE(std::abs(norm_cdf(norm_quantile(p)) - p), 1e-13) << p;
    }
    for (double p : {1e-300, 1e-100, 1e-20, 1e-10, 0.02, 0.02425, 0.97575, 1.0 - 1e-10}) {
        EXPECT_NEAR(norm_cdf(norm_quantile(p)) / p, 1.0, 1e-13) << p;
    }
}

TEST(NormQuantile, SubnormalProbabilities) {
    for (double p : {1e-310, 2.9e-316, 5e-324}) {
        const double x = norm_quantile(p);
        ASSERT_TRUE(std::isfinite(x)) << p;
        EXPECT_LT(x, -37.0);
        EXPECT_NEAR(norm_cdf(x) / p, 1.0, 1e-6) << p;
    }
}

TEST(NormQuantile, CentralRelativeRoundTrip) {
    for (double p = 0.01; p < 0.99; p += 0.0137) {
        EXPECT_NEAR(norm_cdf(norm_quantile(p)) / p, 1.0, 1e-14) << p;
    }
}

TEST(NormQuantile, OddSymmetry) {
    for (double p : {0.5, 0.6, 0.75, 0.9, 0.99, 0.999999}) {
        EXPECT_EQ(norm_quantile(1.0 - p), -norm_quantile(p)) << p;
    }
}

TEST(MillsRatio, KnownValues) {
    EXPECT_NEAR(mills_ratio(0.0), 1.2533141373155003, 1e-15);
    EXPECT_NEAR(mills_ratio(1.0), 0.65567954241879847, 1e-15);
    EXPECT_NEAR(mills_ratio(5.9), 0.16499154530032381, 1e-15);
    EXPECT_NEAR(mills_ratio(6.0), 0.16237766089686746, 1e-15);
    EXPECT_NEAR(mills_ratio(8.0), 0.12313196325793230, 1e-15);
    EXPECT_NEAR(mills_ratio(20.0), 0.049875925981836784, 1e-15);
    EXPECT_NEAR(mills_ratio(-3.0) / 225.33489622034912, 1.0, 1e-13);
}

TEST(MillsRatio, BranchesJoinContinuously) {
    EXPECT_NEAR(mills_ratio(std::nextafter(6.0, 0.0)) / mills_ratio(6.0), 1.0, 1e-14);
}

TEST(HFunction, PinelisProperties) {
    EXPECT_EQ(h_function(0.0), 0.0);
    EXPECT_NEAR(h_function(40.0), 1.0, 1e-3);
    double prev = h_function(0.0);
    for (double x = 0.05; x <= 40.0; x += 0.05) {
        const double cur = h_function(x);
        EXPECT_GT(cur, prev) << x;
        EXPECT_LT(cur, 1.0);
        prev = cur;
    }
}

TEST(HermiteHe, SmallCases) {
    EXPECT_EQ(hermite_he(0, 3.7), 1.0);
    EXPECT_EQ(hermite_he(1, 3.7), 3.7);
    EXPECT_EQ(hermite_he(2, 3.0), 8.0);
    EXPECT_DOUBLE_EQ(hermite_he(5, 1.5), hermite_explicit(5, 1.5));
    EXPECT_DOUBLE_EQ(hermite_he(5, 1.5), -3.65625);
}

TEST(HermiteHe, RecurrenceMatchesExplicitSum) {
    for (unsigned k = 0; k <= 20; ++k) {
        for (double x = -4.0; x <= 4.0; x += 0.125) {
            const double expected = hermite_explicit(k, x);
            EXPECT_NEAR(hermite_he(k, x), expected, 1e-9 * std::max(1.0, std::abs(expected))) << k << " " << x;
        }
    }
}

}  // namespace
}  // namespace gausscop
