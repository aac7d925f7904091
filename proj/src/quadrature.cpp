#include "gausscop/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "gausscop/gauss_core.hpp"

namespace gausscop {

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw DomainError("QuadratureConfig: tolerances must be positive");
    }
    if (max_subdivisions < 1 || series_max_terms < 1) {
        throw DomainError("QuadratureConfig: max_subdivisions and series_max_terms must be >= 1");
    }
}

namespace {

QuadratureRule build_legendre(int n) {
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double step = p1 / dp;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// Physicists' Hermite nodes by Newton iteration on the orthonormal recurrence,
// rescaled to the standard normal weight.
QuadratureRule build_hermite(int n) {
    constexpr double kPim4 = 0.7511255444649425;  // pi^(-1/4)
    std::vector<double> x(n);
    std::vector<double> w(n);
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * x[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * x[1];
        } else {
            z = 2.0 * z - x[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = kPim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double step = p1 / pp;
            z -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    for (int i = 0; i < n; ++i) {
        // Ascending order.
        rule.nodes[i] = kSqrt2 * x[n - 1 - i];
        rule.weights[i] = w[n - 1 - i] * inv_sqrt_pi;
    }
    return rule;
}

template <class Build>
const QuadratureRule& cached(std::map<int, std::unique_ptr<QuadratureRule>>& cache, std::mutex& mu, int n,
                             Build build) {
    if (n < 1) throw DomainError("quadrature rule order must be >= 1");
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<QuadratureRule>(build(n));
    return *slot;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
    static std::map<int, std::unique_ptr<QuadratureRule>> cache;
    static std::mutex mu;
    return cached(cache, mu, n, build_legendre);
}

const QuadratureRule& gauss_hermite_normal(int n) {
    static std::map<int, std::unique_ptr<QuadratureRule>> cache;
    static std::mutex mu;
    return cached(cache, mu, n, build_hermite);
}

std::vector<double> make_breakpoints(double lo, double hi, std::initializer_list<double> interior) {
    std::vector<double> points{lo, hi};
    for (double p : interior) {
        if (std::isfinite(p) && p > lo && p < hi) points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace gausscop
