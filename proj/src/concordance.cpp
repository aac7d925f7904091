#include "gausscop/concordance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "gausscop/copula.hpp"
#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"

namespace gausscop {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 5> kNames{{
    {Measure::blomqvist_beta, "blomqvist_beta"},
    {Measure::kendall_tau, "kendall_tau"},
    {Measure::spearman_rho, "spearman_rho"},
    {Measure::gini_gamma, "gini_gamma"},
    {Measure::gamma_tilde, "gamma_tilde"},
}};

constexpr std::array<std::pair<std::string_view, Measure>, 4> kAliases{{
    {"beta", Measure::blomqvist_beta},
    {"tau", Measure::kendall_tau},
    {"spearman", Measure::spearman_rho},
    {"gini", Measure::gini_gamma},
}};

constexpr double kTruncation = 9.0;

// int_0^1 f(u) du computed as int f(Phi(x)) phi(x) dx.
template <class F>
double unit_integral(F f, const QuadratureConfig& cfg) {
    auto g = [&f](double x) { return f(norm_cdf(x)) * norm_pdf(x); };
    const double points[] = {-kTruncation, 0.0, kTruncation};
    return integrate(g, std::span<const double>(points), cfg).value;
}

// int int f(x, y) phi(x) phi(y) dx dy over the truncated plane.
template <class F>
double normal_plane_integral(F f, const QuadratureConfig& cfg) {
    QuadratureConfig inner_cfg = cfg;
    inner_cfg.abs_tol = 0.1 * cfg.abs_tol;
    const double points[] = {-kTruncation, 0.0, kTruncation};
    auto outer = [&](double x) {
        auto inner = [&](double y) { return f(x, y) * norm_pdf(y); };
        return integrate(inner, std::span<const double>(points), inner_cfg).value * norm_pdf(x);
    };
    return integrate(outer, std::span<const double>(points), cfg).value;
}

double clamp_unit(double x) {
    return std::clamp(x, -1.0, 1.0);
}

}  // namespace

std::string_view to_string(Measure measure) {
    for (const auto& [m, name] : kNames) {
        if (m == measure) return name;
    }
    return "unknown";
}

Measure parse_measure(std::string_view name) {
    for (const auto& [m, n] : kNames) {
        if (n == name) return m;
    }
    for (const auto& [alias, m] : kAliases) {
        if (alias == name) return m;
    }
    throw DomainError("unknown concordance measure: " + std::string(name));
}

double gini_gamma_form1(Correlation rho) {
    const double r = rho.value();
    return 2.0 / kPi * (std::asin(0.5 * (1.0 + r)) - std::asin(0.5 * (1.0 - r)));
}

double gini_gamma_form2(Correlation rho) {
    const double r = rho.value();
    return 4.0 / kPi * (std::asin(0.5 * std::sqrt(1.0 + r)) - std::asin(0.5 * std::sqrt(1.0 - r)));
}

double gini_gamma_form3(Correlation rho) {
    const double r = rho.value();
    return 4.0 / kPi * std::asin(0.25 * (std::sqrt((1.0 + r) * (3.0 + r)) - std::sqrt((1.0 - r) * (3.0 - r))));
}

MeasureValue measure_closed_form(Measure measure, Correlation rho) {
    const double r = rho.value();
    double value = 0.0;
    switch (measure) {
        case Measure::blomqvist_beta:
        case Measure::kendall_tau:
            value = 2.0 / kPi * std::asin(r);
            break;
        case Measure::spearman_rho:
            value = 6.0 / kPi * std::asin(0.5 * r);
            break;
        case Measure::gini_gamma:
            value = gini_gamma_form1(rho);
            break;
        case Measure::gamma_tilde:
            value = 4.0 / kPi * std::asin(r / kSqrt2);
            break;
    }
    return {measure, clamp_unit(value), rho};
}

MeasureValue measure_numeric(Measure measure, Correlation rho, const QuadratureConfig& cfg) {
    const double r = rho.value();
    if (!(std::abs(r) <= 0.99)) throw DomainError("measure_numeric requires |rho| <= 0.99");
    double value = 0.0;
    switch (measure) {
        case Measure::blomqvist_beta:
            value = 4.0 * copula_cdf(0.5, 0.5, rho, Phi2Method::automatic, cfg) - 1.0;
            break;
        case Measure::kendall_tau: {
            const double s = std::sqrt((1.0 - r) * (1.0 + r));
            auto f = [r, s](double x, double y) {
                return norm_cdf((y - r * x) / s) * norm_cdf((x - r * y) / s);
            };
            value = 1.0 - 4.0 * normal_plane_integral(f, cfg);
            break;
        }
        case Measure::spearman_rho: {
            auto f = [&](double x, double y) { return phi2_cdf(x, y, rho, Phi2Method::automatic, cfg); };
            value = 12.0 * normal_plane_integral(f, cfg) - 3.0;
            break;
        }
        case Measure::gini_gamma: {
            auto diag = [&](double u) { return copula_cdf(u, u, rho, Phi2Method::automatic, cfg); };
            auto anti = [&](double u) { return u - copula_cdf(u, u, -r, Phi2Method::automatic, cfg); };
            value = 4.0 * (unit_integral(diag, cfg) + unit_integral(anti, cfg) - 0.5);
            break;
        }
        case Measure::gamma_tilde: {
            auto line_u = [&](double u) { return copula_cdf(u, 0.5, rho, Phi2Method::automatic, cfg); };
            auto line_v = [&](double v) { return copula_cdf(0.5, v, rho, Phi2Method::automatic, cfg); };
            value = 4.0 * (unit_integral(line_u, cfg) + unit_integral(line_v, cfg) - 0.5);
            break;
        }
    }
    return {measure, value, rho};
}

Correlation measure_invert(Measure measure, double value) {
    if (!(value >= -1.0 && value <= 1.0)) throw DomainError("measure value must lie in [-1, 1]");
    double r = 0.0;
    switch (measure) {
        case Measure::blomqvist_beta:
        case Measure::kendall_tau:
            r = std::sin(0.5 * kPi * value);
            break;
        case Measure::spearman_rho:
            r = 2.0 * std::sin(kPi * value / 6.0);
            break;
        case Measure::gini_gamma: {
            const double t = 0.25 * kPi * value;
            const double tan_t = std::tan(t);
            r = std::sin(t) * std::sqrt(3.0 - tan_t * tan_t);
            break;
        }
        case Measure::gamma_tilde:
            r = kSqrt2 * std::sin(0.25 * kPi * value);
            break;
    }
    return clamp_unit(r);
}

double diag_integral_closed(Correlation rho) {
    return 0.25 + std::asin(0.5 * (1.0 + rho.value())) / (2.0 * kPi);
}

double diag_integral_closed_alt(Correlation rho) {
    return 0.5 - std::asin(0.5 * std::sqrt(1.0 - rho.value())) / kPi;
}

double halfline_integral_closed(Correlation rho) {
    return 0.25 + std::asin(rho.value() / kSqrt2) / (2.0 * kPi);
}

double diag_integral(Correlation rho, const QuadratureConfig& cfg) {
    return unit_integral([&](double u) { return diag_cdf(u, rho); }, cfg);
}

double halfline_integral(Correlation rho, const QuadratureConfig& cfg) {
    return unit_integral([&](double u) { return halfline_cdf(u, rho); }, cfg);
}

}  // namespace gausscop
