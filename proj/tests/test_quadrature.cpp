#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"
#include "gausscop/quadrature.hpp"

namespace gausscop {
namespace {

TEST(QuadratureConfig, ValidateRejectsBadValues) {
    EXPECT_NO_THROW(QuadratureConfig{}.validate());
    EXPECT_THROW((QuadratureConfig{0.0, 1e-12, 10, 10}.validate()), DomainError);
    EXPECT_THROW((QuadratureConfig{1e-12, -1.0, 10, 10}.validate()), DomainError);
    EXPECT_THROW((QuadratureConfig{1e-12, 1e-12, 0, 10}.validate()), DomainError);
    EXPECT_THROW((QuadratureConfig{1e-12, 1e-12, 10, 0}.validate()), DomainError);
}

TEST(KronrodConstants, MatchBoost) {
    const auto& abscissa = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
    const auto& weights = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
    // Boost stores from the centre outwards.
    for (int j = 0; j < 8; ++j) {
        EXPECT_NEAR(detail::kXgk[j], abscissa[7 - j], 1e-16);
        EXPECT_NEAR(detail::kWgk[j], weights[7 - j], 1e-16);
    }
}

TEST(KronrodConstants, PolynomialExactness) {
    // K15 integrates degree 22 (and lower) exactly, G7 degree 13.
    for (int degree = 0; degree <= 22; ++degree) {
        auto f = [degree](double x) { return std::pow(x, degree); };
        const auto seg = detail::gk15(f, -1.0, 1.0);
        const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
        EXPECT_NEAR(seg.value, exact, 1e-15) << degree;
        if (degree <= 13) EXPECT_NEAR(seg.error, 0.0, 1e-15) << degree;
    }
}

TEST(GaussLegendre, ExactForPolynomials) {
    for (int n : {1, 5, 20, 64}) {
        const auto& rule = gauss_legendre(n);
        ASSERT_EQ(rule.nodes.size(), static_cast<std::size_t>(n));
        for (int degree = 0; degree <= 2 * n - 1 && degree <= 60; ++degree) {
            double sum = 0.0;
            for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], degree);
            const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
            EXPECT_NEAR(sum, exact, 1e-13) << n << " " << degree;
        }
    }
    EXPECT_THROW(gauss_legendre(0), DomainError);
}

TEST(GaussHermite, NormalMoments) {
    const auto& rule = gauss_hermite_normal(96);
    ASSERT_EQ(rule.nodes.size(), 96u);
    double moment = 1.0;  // (k-1)!! for even k
    for (int k = 0; k <= 40; k += 2) {
        if (k > 0) moment *= (k - 1);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
        EXPECT_NEAR(sum / moment, 1.0, 1e-11) << k;
    }
    for (std::size_t i = 1; i < rule.nodes.size(); ++i) EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
}

TEST(Integrate, SmoothAndPeaked) {
    const QuadratureConfig cfg;
    EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, cfg).value, std::exp(1.0) - 1.0, 1e-14);
    EXPECT_NEAR(integrate([](double x) { return norm_pdf(x); }, -9.0, 1.0, cfg).value, norm_cdf(1.0), 1e-14);
    EXPECT_NEAR(integrate([](double x) { return 1.0 / (1e-4 + x * x); }, -1.0, 1.0, cfg).value,
                2.0 * std::atan(1.0 / 1e-2) / 1e-2, 1e-9);
    EXPECT_NEAR(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg).value, 2.0 / 3.0, 1e-12);
}

TEST(Integrate, BreakpointsHandleKinks) {
    const auto points = make_breakpoints(-1.0, 2.0, {0.3});
    ASSERT_EQ(points.size(), 3u);
    const auto r = integrate([](double x) { return std::abs(x - 0.3); }, points, QuadratureConfig{});
    EXPECT_NEAR(r.value, 0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7, 1e-14);
    EXPECT_LE(r.evaluations, 2 * 15);
}

TEST(Integrate, MakeBreakpointsDropsOutsidePoints) {
    const auto points = make_breakpoints(0.0, 1.0, {-2.0, 0.5, 0.5, 3.0});
    EXPECT_EQ(points, (std::vector<double>{0.0, 0.5, 1.0}));
}

TEST(Integrate, ThrowsWhenBudgetExhausted) {
    const QuadratureConfig tight{1e-300, 1e-300, 3, 10};
    try {
        integrate([](double x) { return std::sin(40.0 * x) / (x + 1e-3); }, 0.0, 3.0, tight);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_GT(e.achieved_error(), 0.0);
    }
}

}  // namespace
}  // namespace gausscop
