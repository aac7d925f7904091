#include "gausscop/gauss_core.hpp"

#include <cmath>
#include <limits>

#include "gausscop/errors.hpp"

namespace gausscop {

namespace {

constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;

// Acklam's coefficients.
constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                        1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                        6.680131188771972e+01,  -1.328068155288572e+01};
constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                        -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                        3.754408661907416e+00};

constexpr double kLowTail = 0.02425;

// Quantile for 0 < p <= 1/2; the result is <= 0.
double lower_quantile(double p) {
    double x;
    if (p < kLowTail) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    // Halley refinement. The relative residual stays accurate in the lower tail
    // because norm_cdf has full relative precision there.
    // e / phi(x) is formed as (e / p) * p / phi(x) so deep tails do not overflow.
    const double e = norm_cdf(x) - p;
    const double u = (e / p) * kSqrt2Pi * std::exp(std::log(p) + 0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace

double norm_pdf(double x) noexcept {
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double norm_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / kSqrt2);
}

double norm_sf(double x) noexcept {
    return 0.5 * std::erfc(x / kSqrt2);
}

double norm_quantile(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("norm_quantile: probability outside [0, 1]");
    }
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    if (p == 0.5) return 0.0;
    // 1 - p is exact for p in [1/2, 1], so the odd symmetry holds exactly there.
    return p < 0.5 ? lower_quantile(p) : -lower_quantile(1.0 - p);
}

double mills_ratio(double x) noexcept {
    if (x < 6.0) {
        return norm_sf(x) / norm_pdf(x);
    }
    // R(x) = 1/(x+ 1/(x+ 2/(x+ 3/(x+ ...)))) evaluated from the tail.
    double tail = x;
    for (int n = 60; n >= 1; --n) {
        tail = x + n / tail;
    }
    return 1.0 / tail;
}

double h_function(double x) noexcept {
    return x * mills_ratio(x);
}

double hermite_he(unsigned k, double x) noexcept {
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (unsigned n = 1; n < k; ++n) {
        const double next = x * cur - n * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace gausscop
