#include "gausscop/owen_t.hpp"

#include <algorithm>
#include <cmath>

#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"
#include "gausscop/quadrature.hpp"

namespace gausscop {

namespace {

constexpr int kPanelOrder = 20;
// Beyond x = kCutoff / h the integrand is below exp(-kCutoff^2 / 2) of its peak.
constexpr double kCutoff = 10.0;

// 0 <= a <= 1, h >= 0.
double owen_t_core(double h, double a) {
    if (a == 0.0) return 0.0;
    if (h == 0.0) return std::atan(a) / (2.0 * kPi);
    const double scale = std::exp(-0.5 * h * h) / (2.0 * kPi);
    if (scale == 0.0) return 0.0;

    const double upper = std::min(a, kCutoff / h);
    // One panel per two standard deviations of exp(-h^2 x^2 / 2).
    const int panels = std::clamp(static_cast<int>(std::ceil(h * upper / 2.0)), 1, 8);
    const double width = upper / panels;
    const auto& rule = gauss_legendre(kPanelOrder);
    const double h2 = 0.5 * h * h;

    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double centre = (p + 0.5) * width;
        double panel = 0.0;
        for (int i = 0; i < kPanelOrder; ++i) {
            const double x = centre + 0.5 * width * rule.nodes[i];
            const double x2 = x * x;
            panel += rule.weights[i] * std::exp(-h2 * x2) / (1.0 + x2);
        }
        sum += 0.5 * width * panel;
    }
    return scale * sum;
}

}  // namespace

double owen_t(double h, double a) {
    if (std::isnan(h) || std::isnan(a) || std::isinf(h)) {
        throw DomainError("owen_t: h must be finite and a must not be NaN");
    }
    if (std::isinf(a)) return owen_t_unbounded(h, a > 0 ? 1 : -1);

    const double sign = a < 0.0 ? -1.0 : 1.0;
    const double abs_a = std::abs(a);
    const double abs_h = std::abs(h);

    if (abs_a <= 1.0) return sign * owen_t_core(abs_h, abs_a);

    const double ah = abs_a * abs_h;
    const double complement =
        0.5 * (norm_cdf(abs_h) * norm_sf(ah) + norm_cdf(ah) * norm_sf(abs_h));
    return sign * (complement - owen_t_core(ah, 1.0 / abs_a));
}

double owen_t_unbounded(double h, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("owen_t_unbounded: sign must be +1 or -1");
    if (!std::isfinite(h)) throw DomainError("owen_t_unbounded: h must be finite");
    return sign * 0.5 * norm_sf(std::abs(h));
}

}  // namespace gausscop
