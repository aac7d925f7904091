#include "gausscop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"

namespace gausscop::oracle {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

constexpr double kLowerLimit = -9.0;
constexpr int kMaxDepth = 30;
constexpr int kMaxPanels = 20000;
constexpr std::uint64_t kBlockSize = 1u << 16;

// Recursive bisection on a single GK61 panel; the absolute tolerance is
// halved with each split, the relative one applies to the panel value.
struct Panel {
    double value;
    double error;
    double l1;
};

template <class F>
Panel bisect(const F& f, double a, double b, double abs_tol, double rel_tol, int depth, int& budget) {
    if (--budget < 0) throw ConvergenceError("oracle quadrature exhausted its panel budget", abs_tol);
    double error = 0.0;
    double l1 = 0.0;
    const double value = Kronrod::integrate(f, a, b, 0, 0.0, &error, &l1);
    if (!std::isfinite(value) || !std::isfinite(error)) {
        throw ConvergenceError("oracle quadrature met a non-finite integrand", error);
    }
    // Below this the estimate is rounding noise and splitting cannot help.
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * l1;
    if (error <= std::max({abs_tol, rel_tol * std::abs(value), noise}) || depth == 0) return {value, error, l1};
    const double mid = 0.5 * (a + b);
    if (!(mid > a && mid < b)) return {value, error, l1};
    const auto left = bisect(f, a, mid, 0.5 * abs_tol, rel_tol, depth - 1, budget);
    const auto right = bisect(f, mid, b, 0.5 * abs_tol, rel_tol, depth - 1, budget);
    return {left.value + right.value, left.error + right.error, left.l1 + right.l1};
}

template <class F>
Panel adaptive(const F& f, double a, double b, double abs_tol, double rel_tol) {
    if (!(b > a)) return {0.0, 0.0, 0.0};
    int budget = kMaxPanels;
    return bisect(f, a, b, abs_tol, rel_tol, kMaxDepth, budget);
}

}  // namespace

OracleResult quad1d(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg) {
    const auto result = adaptive(f, a, b, cfg.abs_tol, cfg.rel_tol);
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * result.l1;
    if (result.error > std::max({cfg.abs_tol, cfg.rel_tol * std::abs(result.value), noise})) {
        throw ConvergenceError("oracle quad1d did not converge", result.error);
    }
    return {result.value, result.error};
}

OracleResult quad2d_phi2(double h, double k, Correlation rho, const QuadratureConfig& cfg) {
    if (!rho.is_interior()) throw DomainError("quad2d_phi2 requires |rho| < 1");
    const double r = rho.value();
    const double one_minus = (1.0 - r) * (1.0 + r);
    const double norm = 1.0 / (2.0 * kPi * std::sqrt(one_minus));
    const double x_hi = std::min(h, -kLowerLimit);
    const double y_hi = std::min(k, -kLowerLimit);
    const double tail = 2.0 * norm_cdf(kLowerLimit);
    if (x_hi <= kLowerLimit || y_hi <= kLowerLimit) return {0.0, tail};

    // Inner results are integrated over at most 18 units of x.
    const double inner_tol = 0.01 * cfg.abs_tol;
    double inner_error_max = 0.0;
    auto outer = [&](double x) {
        auto density = [&](double y) {
            return norm * std::exp(-(x * x - 2.0 * r * x * y + y * y) / (2.0 * one_minus));
        };
        // Split at the ridge y = r x so the narrow peak is never straddled blindly.
        const double ridge = std::clamp(r * x, kLowerLimit, y_hi);
        const auto lo = adaptive(density, kLowerLimit, ridge, inner_tol, 0.01 * cfg.rel_tol);
        const auto hi = adaptive(density, ridge, y_hi, inner_tol, 0.01 * cfg.rel_tol);
        inner_error_max = std::max(inner_error_max, lo.error + hi.error);
        return lo.value + hi.value;
    };
    const double mid = std::clamp(0.0, kLowerLimit, x_hi);
    const auto left = adaptive(outer, kLowerLimit, mid, 0.5 * cfg.abs_tol, cfg.rel_tol);
    const auto right = adaptive(outer, mid, x_hi, 0.5 * cfg.abs_tol, cfg.rel_tol);
    const double value = left.value + right.value;
    const double quad_error = left.error + right.error + 18.0 * inner_error_max;
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (left.l1 + right.l1);
    if (quad_error > std::max({cfg.abs_tol, cfg.rel_tol * std::abs(value), noise})) {
        throw ConvergenceError("oracle quad2d_phi2 did not converge", quad_error);
    }
    return {value, quad_error + tail};
}

McEstimate mc_factor_model(const FactorModel& model, const McConfig& mc) {
    auto open_loading = [](double x) { return x > -1.0 && x < 1.0; };
    if (!open_loading(model.alpha) || !open_loading(model.beta) || !open_loading(model.gamma)) {
        throw DomainError("factor model loadings and gamma must lie in (-1, 1)");
    }
    if (!(model.u >= 0.0 && model.u <= 1.0 && model.v >= 0.0 && model.v <= 1.0)) {
        throw DomainError("factor model thresholds must lie in [0, 1]");
    }
    if (mc.n_paths < 2) throw DomainError("mc_factor_model needs at least 2 paths");

    const double h = norm_quantile(model.u);
    const double k = norm_quantile(model.v);
    const double s_alpha = std::sqrt(1.0 - model.alpha * model.alpha);
    const double s_beta = std::sqrt(1.0 - model.beta * model.beta);
    const double s_gamma = std::sqrt(1.0 - model.gamma * model.gamma);

    const std::uint64_t blocks = (mc.n_paths + kBlockSize - 1) / kBlockSize;
    std::vector<double> joint_sums(blocks, 0.0);
    std::vector<double> p_sums(blocks, 0.0);
    std::vector<double> p_squares(blocks, 0.0);

    for (std::uint64_t block = 0; block < blocks; ++block) {
        std::seed_seq seq{static_cast<std::uint32_t>(mc.seed), static_cast<std::uint32_t>(mc.seed >> 32),
                          static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal;
        const std::uint64_t begin = block * kBlockSize;
        const std::uint64_t end = std::min(mc.n_paths, begin + kBlockSize);
        double joint = 0.0, p_sum = 0.0, p_sq = 0.0;
        for (std::uint64_t i = begin; i < end; ++i) {
            // Cholesky of [[1, gamma], [gamma, 1]].
            const double y = normal(rng);
            const double y_tilde = model.gamma * y + s_gamma * normal(rng);
            const double x = model.alpha * y + s_alpha * normal(rng);
            const double x_tilde = model.beta * y_tilde + s_beta * normal(rng);
            joint += (x <= h && x_tilde <= k) ? 1.0 : 0.0;
            const double p = norm_cdf((h - model.alpha * y) / s_alpha);
            p_sum += p;
            p_sq += p * p;
        }
        joint_sums[block] = joint;
        p_sums[block] = p_sum;
        p_squares[block] = p_sq;
    }

    double joint = 0.0, p_sum = 0.0, p_sq = 0.0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        joint += joint_sums[b];
        p_sum += p_sums[b];
        p_sq += p_squares[b];
    }
    const double n = static_cast<double>(mc.n_paths);
    const double joint_mean = joint / n;
    const double p_mean = p_sum / n;
    // Indicator variance is m(1-m); guard the degenerate m in {0, 1}.
    const double joint_var = std::max(joint_mean * (1.0 - joint_mean), 1.0 / n) * n / (n - 1.0);
    const double p_var = std::max(p_sq / n - p_mean * p_mean, 0.0) * n / (n - 1.0);
    return {joint_mean, std::sqrt(joint_var / n), p_mean, std::sqrt(p_var / n), mc.n_paths};
}

}  // namespace gausscop::oracle
