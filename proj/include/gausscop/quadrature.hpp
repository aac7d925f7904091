#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

#include "gausscop/errors.hpp"

namespace gausscop {

/// Tolerances and limits shared by every numeric integral and series.
struct QuadratureConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_subdivisions = 400;
    int series_max_terms = 80;

    /// Throws DomainError unless tolerances are positive and limits >= 1.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

/// Nodes and weights of an n-point rule.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]. Cached; safe to call concurrently.
const QuadratureRule& gauss_legendre(int n);

/// Gauss-Hermite rule for the standard normal weight: sum w_i f(z_i) ~ E f(Z).
const QuadratureRule& gauss_hermite_normal(int n);

namespace detail {

struct Segment {
    double a;
    double b;
    double value;
    double error;
};

inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
Segment gk15(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double sum = f(centre - dx) + f(centre + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/**
 * Globally adaptive G7/K15 quadrature of f over the union of consecutive
 * intervals [p0,p1], [p1,p2], ... given by the breakpoints.
 *
 * The segment with the largest error estimate is bisected until the total
 * estimate drops below max(abs_tol, rel_tol * |value|). Throws
 * ConvergenceError once cfg.max_subdivisions bisections are spent.
 */
template <class F>
QuadResult integrate(F&& f, std::span<const double> breakpoints, const QuadratureConfig& cfg) {
    std::vector<detail::Segment> heap;
    heap.reserve(breakpoints.size() + static_cast<std::size_t>(cfg.max_subdivisions) + 1);
    auto by_error = [](const detail::Segment& x, const detail::Segment& y) { return x.error < y.error; };
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] > breakpoints[i]) {
            heap.push_back(detail::gk15(f, breakpoints[i], breakpoints[i + 1]));
        }
    }
    std::make_heap(heap.begin(), heap.end(), by_error);

    auto totals = [&heap] {
        double value = 0.0;
        double error = 0.0;
        for (const auto& s : heap) {
            value += s.value;
            error += s.error;
        }
        return std::pair{value, error};
    };

    auto [value, error] = totals();
    int evaluations = static_cast<int>(heap.size()) * 15;
    for (int split = 0; split < cfg.max_subdivisions; ++split) {
        if (heap.empty() || error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
            return {value, error, evaluations};
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const detail::Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval exhausted at machine resolution; accept it as is.
            heap.push_back({worst.a, worst.b, worst.value, 0.0});
            std::push_heap(heap.begin(), heap.end(), by_error);
        } else {
            heap.push_back(detail::gk15(f, worst.a, mid));
            std::push_heap(heap.begin(), heap.end(), by_error);
            heap.push_back(detail::gk15(f, mid, worst.b));
            std::push_heap(heap.begin(), heap.end(), by_error);
            evaluations += 30;
        }
        std::tie(value, error) = totals();
    }
    if (error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        return {value, error, evaluations};
    }
    throw ConvergenceError("adaptive quadrature exhausted max_subdivisions", error);
}

template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg) {
    const double points[] = {a, b};
    return integrate(std::forward<F>(f), std::span<const double>(points), cfg);
}

/// Sorts and deduplicates breakpoints, dropping those outside [lo, hi].
std::vector<double> make_breakpoints(double lo, double hi, std::initializer_list<double> interior);

}  // namespace gausscop
