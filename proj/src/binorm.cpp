#include "gausscop/binorm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"
#include "gausscop/owen_t.hpp"

namespace gausscop {

Correlation::Correlation(double rho) : rho_(rho) {
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw DomainError("correlation must lie in [-1, 1]");
    }
}

namespace {

constexpr std::array<std::pair<Phi2Method, std::string_view>, 6> kMethodNames{{
    {Phi2Method::automatic, "auto"},
    {Phi2Method::owen, "owen"},
    {Phi2Method::plackett_from_independence, "plackett_from_independence"},
    {Phi2Method::plackett_from_max, "plackett_from_max"},
    {Phi2Method::tetrachoric, "tetrachoric"},
    {Phi2Method::single_factor_quadrature, "single_factor_quadrature"},
}};

constexpr double kAutoSwitchRho = 0.8;
constexpr double kHermiteMaxRho = 0.7;
constexpr int kHermiteNodes = 96;
constexpr double kTruncation = 9.0;
// Cramer's bound |He_n(x)| <= K sqrt(n!) exp(x^2/4).
constexpr double kCramer = 1.086435;

double density_unchecked(double x, double y, double r) {
    const double one_minus = (1.0 - r) * (1.0 + r);
    // x^2 - 2rxy + y^2 rewritten to avoid cancellation as |r| -> 1.
    const double quad = r >= 0.0 ? (x - y) * (x - y) + 2.0 * (1.0 - r) * x * y
                                 : (x + y) * (x + y) - 2.0 * (1.0 + r) * x * y;
    const double q = quad / (2.0 * one_minus);
    return std::exp(-q) / (2.0 * kPi * std::sqrt(one_minus));
}

double owen_engine(double h, double k, double r) {
    if (h == 0.0 && k == 0.0) return 0.25 + std::asin(r) / (2.0 * kPi);
    const double s = std::sqrt((1.0 - r) * (1.0 + r));
    auto t_term = [&](double x, double y) {
        if (x == 0.0) return owen_t_unbounded(0.0, y > 0.0 ? 1 : -1);
        return owen_t(x, (y - r * x) / (x * s));
    };
    const bool split = (h < 0.0 && k >= 0.0) || (h >= 0.0 && k < 0.0);
    const double delta = split ? 0.5 : 0.0;
    return 0.5 * (norm_cdf(h) + norm_cdf(k)) - t_term(h, k) - t_term(k, h) - delta;
}

double plackett_independence_engine(double h, double k, double r, const QuadratureConfig& cfg) {
    auto f = [h, k](double t) { return density_unchecked(h, k, t); };
    const double base = norm_cdf(h) * norm_cdf(k);
    if (r >= 0.0) return base + integrate(f, 0.0, r, cfg).value;
    return base - integrate(f, r, 0.0, cfg).value;
}

// rho > 0.
double plackett_max_positive(double h, double k, double r, const QuadratureConfig& cfg) {
    const double one_minus_rho = 1.0 - r;
    const double root = std::sqrt(one_minus_rho);
    const double diff2 = (h - k) * (h - k);
    const double hk = h * k;
    auto f = [=](double s) {
        const double one_minus_t = one_minus_rho * s * s;
        const double one_plus_t = 2.0 - one_minus_t;
        const double exponent = diff2 / (2.0 * one_minus_t * one_plus_t) + hk / one_plus_t;
        return root * std::exp(-exponent) / (kPi * std::sqrt(one_plus_t));
    };
    return norm_cdf(std::min(h, k)) - integrate(f, 0.0, 1.0, cfg).value;
}

double plackett_max_engine(double h, double k, double r, const QuadratureConfig& cfg) {
    if (r > 0.0) return plackett_max_positive(h, k, r, cfg);
    return norm_cdf(h) - plackett_max_positive(h, -k, -r, cfg);
}

double tetrachoric_engine(double h, double k, double r, const QuadratureConfig& cfg) {
    if (std::abs(r) > kTetrachoricMaxRho) {
        throw EngineRejected("tetrachoric engine requires |rho| <= 0.6");
    }
    // Normalised Hermite values e_n(x) = He_n(x) / sqrt(n!).
    double eh_prev = 0.0, eh = 1.0;
    double ek_prev = 0.0, ek = 1.0;
    double power = r;
    double sum = 0.0;
    const int terms = cfg.series_max_terms;
    for (int n = 0; n < terms; ++n) {
        sum += eh * ek * power / (n + 1);
        const double inv = 1.0 / std::sqrt(n + 1.0);
        const double root_n = std::sqrt(static_cast<double>(n));
        const double eh_next = (h * eh - root_n * eh_prev) * inv;
        const double ek_next = (k * ek - root_n * ek_prev) * inv;
        eh_prev = eh;
        eh = eh_next;
        ek_prev = ek;
        ek = ek_next;
        power *= r;
    }
    const double weight = norm_pdf(h) * norm_pdf(k);
    const double value = norm_cdf(h) * norm_cdf(k) + weight * sum;
    const double abs_r = std::abs(r);
    const double tail = kCramer * kCramer * std::exp(-0.25 * (h * h + k * k)) / (2.0 * kPi) *
                        std::pow(abs_r, terms + 1) / ((terms + 1) * (1.0 - abs_r));
    if (tail > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
        throw ConvergenceError("tetrachoric series truncated above tolerance", tail);
    }
    return value;
}

double single_factor_engine(double h, double k, double r, const QuadratureConfig& cfg) {
    const double a = std::sqrt(std::abs(r));
    const double b = r < 0.0 ? -a : a;
    const double s = std::sqrt(1.0 - std::abs(r));
    auto product = [=](double z) { return norm_cdf((h - a * z) / s) * norm_cdf((k - b * z) / s); };

    if (std::abs(r) <= kHermiteMaxRho) {
        const auto& rule = gauss_hermite_normal(kHermiteNodes);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * product(rule.nodes[i]);
        }
        return sum;
    }
    auto f = [&](double z) { return product(z) * norm_pdf(z); };
    const auto points = make_breakpoints(-kTruncation, kTruncation, {h / a, k / b, 0.0});
    return integrate(f, std::span<const double>(points), cfg).value;
}

}  // namespace

std::string_view to_string(Phi2Method method) {
    for (const auto& [m, name] : kMethodNames) {
        if (m == method) return name;
    }
    return "unknown";
}

Phi2Method parse_phi2_method(std::string_view name) {
    for (const auto& [m, n] : kMethodNames) {
        if (n == name) return m;
    }
    throw DomainError("unknown Phi2 method: " + std::string(name));
}

bool engine_accepts(Phi2Method method, double rho) noexcept {
    if (!(rho >= -1.0 && rho <= 1.0)) return false;
    if (method == Phi2Method::tetrachoric) {
        return std::abs(rho) <= kTetrachoricMaxRho || std::abs(rho) == 1.0;
    }
    return true;
}

double phi2_density(double x, double y, Correlation rho) {
    if (!rho.is_interior()) throw DomainError("phi2_density requires |rho| < 1");
    return density_unchecked(x, y, rho.value());
}

double phi2_cdf(double h, double k, Correlation rho, Phi2Method method, const QuadratureConfig& cfg) {
    if (std::isnan(h) || std::isnan(k)) throw DomainError("phi2_cdf: NaN argument");
    cfg.validate();

    if (h == -std::numeric_limits<double>::infinity() || k == -std::numeric_limits<double>::infinity()) {
        return 0.0;
    }
    if (std::isinf(h)) return norm_cdf(k);
    if (std::isinf(k)) return norm_cdf(h);

    const double r = rho.value();
    const double lower = std::max(norm_cdf(h) - norm_sf(k), 0.0);
    const double upper = norm_cdf(std::min(h, k));
    if (r == 1.0) return upper;
    if (r == -1.0) return lower;
    if (r == 0.0) return norm_cdf(h) * norm_cdf(k);

    double value = 0.0;
    switch (method) {
        case Phi2Method::automatic:
            value = std::abs(r) <= kAutoSwitchRho ? plackett_independence_engine(h, k, r, cfg)
                                                  : plackett_max_engine(h, k, r, cfg);
            break;
        case Phi2Method::owen:
            value = owen_engine(h, k, r);
            break;
        case Phi2Method::plackett_from_independence:
            value = plackett_independence_engine(h, k, r, cfg);
            break;
        case Phi2Method::plackett_from_max:
            value = plackett_max_engine(h, k, r, cfg);
            break;
        case Phi2Method::tetrachoric:
            value = tetrachoric_engine(h, k, r, cfg);
            break;
        case Phi2Method::single_factor_quadrature:
            value = single_factor_engine(h, k, r, cfg);
            break;
    }
    return std::clamp(value, lower, upper);
}

double phi2_auto(double h, double k, Correlation rho, const QuadratureConfig& cfg) {
    return phi2_cdf(h, k, rho, Phi2Method::automatic, cfg);
}

}  // namespace gausscop
