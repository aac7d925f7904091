#include "gausscop/copula.hpp"

#include <algorithm>
#include <cmath>

#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"
#include "gausscop/owen_t.hpp"

namespace gausscop {

namespace {

constexpr double kTruncation = 9.0;

void require_unit(double u, const char* what) {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

void require_open_unit(double u, const char* what) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError(std::string(what) + " must lie in (0, 1)");
}

void require_interior(Correlation rho, const char* what) {
    if (!rho.is_interior()) throw DomainError(std::string(what) + " requires |rho| < 1");
}

void require_open_loading(double x, const char* what) {
    if (!(x > -1.0 && x < 1.0)) throw DomainError(std::string(what) + " must lie in (-1, 1)");
}

double diag_ratio(double rho) {
    return std::sqrt((1.0 - rho) / (1.0 + rho));
}

// Phi((y - r x) / sqrt(1 - r^2)) with infinite arguments resolved.
double conditional(double x, double y, double r) {
    return norm_cdf((y - r * x) / std::sqrt((1.0 - r) * (1.0 + r)));
}

}  // namespace

double copula_cdf(double u, double v, Correlation rho, Phi2Method method, const QuadratureConfig& cfg) {
    require_unit(u, "u");
    require_unit(v, "v");
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;
    const double r = rho.value();
    if (r == 1.0) return std::min(u, v);
    if (r == -1.0) return std::max(u + v - 1.0, 0.0);
    if (r == 0.0) return u * v;
    const double upper = std::min(u, v);
    const double lower = std::min(std::max(u + v - 1.0, 0.0), upper);
    return std::clamp(phi2_cdf(norm_quantile(u), norm_quantile(v), rho, method, cfg), lower, upper);
}

double copula_density(double u, double v, Correlation rho) {
    require_open_unit(u, "u");
    require_open_unit(v, "v");
    require_interior(rho, "copula_density");
    const double r = rho.value();
    const double x = norm_quantile(u);
    const double y = norm_quantile(v);
    const double one_minus = (1.0 - r) * (1.0 + r);
    return std::exp((2.0 * r * x * y - r * r * (x * x + y * y)) / (2.0 * one_minus)) / std::sqrt(one_minus);
}

double copula_density_ratio(double u, double v, Correlation rho) {
    require_open_unit(u, "u");
    require_open_unit(v, "v");
    require_interior(rho, "copula_density_ratio");
    const double x = norm_quantile(u);
    const double y = norm_quantile(v);
    return phi2_density(x, y, rho) / (norm_pdf(x) * norm_pdf(y));
}

double cond_cdf_given_u(double u, double v, Correlation rho) {
    require_open_unit(u, "u");
    require_unit(v, "v");
    require_interior(rho, "cond_cdf_given_u");
    return conditional(norm_quantile(u), norm_quantile(v), rho.value());
}

double cond_cdf_given_v(double u, double v, Correlation rho) {
    require_unit(u, "u");
    require_open_unit(v, "v");
    require_interior(rho, "cond_cdf_given_v");
    return conditional(norm_quantile(v), norm_quantile(u), rho.value());
}

SymmetricForm apply_symmetry(SymmetryKind kind, double u, double v, Correlation rho) {
    require_unit(u, "u");
    require_unit(v, "v");
    const double r = rho.value();
    switch (kind) {
        case SymmetryKind::swap:
            return {{v, u}, rho, 0.0, 1.0};
        case SymmetryKind::reflect_v:
            return {{u, 1.0 - v}, -r, u, -1.0};
        case SymmetryKind::reflect_u:
            return {{1.0 - u, v}, -r, v, -1.0};
        case SymmetryKind::reflect_uv:
            return {{1.0 - u, 1.0 - v}, rho, u + v - 1.0, 1.0};
    }
    throw DomainError("unknown symmetry kind");
}

double evaluate(const SymmetricForm& form, Phi2Method method, const QuadratureConfig& cfg) {
    return form.offset + form.sign * copula_cdf(form.point.u, form.point.v, form.rho, method, cfg);
}

double diag_g(double u, Correlation rho) {
    require_unit(u, "u");
    if (u == 0.0 || u == 1.0) return u;
    require_interior(rho, "diag_g");
    return norm_cdf(diag_ratio(rho.value()) * norm_quantile(u));
}

double diag_cdf(double u, Correlation rho) {
    require_unit(u, "u");
    if (u == 0.0 || u == 1.0) return u;
    const double r = rho.value();
    if (r == 1.0) return u;
    if (r == -1.0) return std::max(2.0 * u - 1.0, 0.0);
    if (r == 0.0) return u * u;
    const double value = u - 2.0 * owen_t(norm_quantile(u), diag_ratio(r));
    return std::clamp(value, std::max(2.0 * u - 1.0, 0.0), u);
}

double diag_cdf_integral(double u, Correlation rho, const QuadratureConfig& cfg) {
    require_unit(u, "u");
    if (u == 0.0 || u == 1.0) return u;
    const double r = rho.value();
    if (rho.is_boundary()) return diag_cdf(u, rho);
    // t = Phi(x): 2 * int_{-inf}^{h} Phi(lambda x) phi(x) dx.
    const double h = std::min(norm_quantile(u), kTruncation);
    if (h <= -kTruncation) return 0.0;
    const double lambda = diag_ratio(r);
    auto f = [lambda](double x) { return norm_cdf(lambda * x) * norm_pdf(x); };
    const auto points = make_breakpoints(-kTruncation, h, {0.0});
    return 2.0 * integrate(f, std::span<const double>(points), cfg).value;
}

double halfline_cdf(double u, Correlation rho) {
    require_unit(u, "u");
    if (u == 0.0) return 0.0;
    if (u == 1.0) return 0.5;
    const double r = rho.value();
    if (r == 1.0) return std::min(u, 0.5);
    if (r == -1.0) return std::max(u - 0.5, 0.0);
    if (r == 0.0) return 0.5 * u;
    const double value = 0.5 * u - owen_t(norm_quantile(u), -r / std::sqrt((1.0 - r) * (1.0 + r)));
    return std::clamp(value, std::max(u - 0.5, 0.0), std::min(u, 0.5));
}

HalflineReduction reduce_to_halflines(double u, double v, Correlation rho) {
    require_open_unit(u, "u");
    require_open_unit(v, "v");
    if (u == 0.5 || v == 0.5) throw SingularParameter("reduce_to_halflines: u or v equals 1/2");
    if (!rho.is_interior()) throw SingularParameter("reduce_to_halflines: |rho| = 1");
    const double r = rho.value();
    const double h = norm_quantile(u);
    const double k = norm_quantile(v);
    const double quad = r >= 0.0 ? (h - k) * (h - k) + 2.0 * (1.0 - r) * h * k
                                 : (h + k) * (h + k) - 2.0 * (1.0 + r) * h * k;
    const double norm = std::sqrt(quad);
    // rho_u = sin(arctan(-alpha_u)) without dividing by h.
    auto side = [&](double x, double y) {
        const double value = -std::copysign(1.0, x) * (y - r * x) / norm;
        return std::clamp(value, -1.0, 1.0);
    };
    const bool split = (h < 0.0 && k >= 0.0) || (h >= 0.0 && k < 0.0);
    return {u, side(h, k), v, side(k, h), split ? 0.5 : 0.0};
}

double evaluate(const HalflineReduction& reduction) {
    return halfline_cdf(reduction.u, reduction.rho_u) + halfline_cdf(reduction.v, reduction.rho_v) -
           reduction.delta;
}

double line_from_diag(double u, Correlation rho) {
    require_unit(u, "u");
    const double r = rho.value();
    if (r == 0.0) return 0.5 * u;
    const double diag = diag_cdf(u, 1.0 - 2.0 * r * r);
    return r < 0.0 ? 0.5 * diag : u - 0.5 * diag;
}

double diag_g_transform(double u, Correlation rho) {
    require_open_unit(u, "u");
    require_interior(rho, "diag_g_transform");
    const double g = diag_g(u, rho);
    return 2.0 * u * g - diag_cdf(g, -rho.value());
}

double copula_factor_integral(double u, double v, double alpha, double beta, double gamma,
                              const QuadratureConfig& cfg) {
    require_unit(u, "u");
    require_unit(v, "v");
    require_open_loading(alpha, "alpha");
    require_open_loading(beta, "beta");
    require_open_loading(gamma, "gamma");
    const double h = norm_quantile(u);
    const double k = norm_quantile(v);
    const double s_alpha = std::sqrt((1.0 - alpha) * (1.0 + alpha));
    const double s_beta = std::sqrt((1.0 - beta) * (1.0 + beta));
    const double s_gamma = std::sqrt((1.0 - gamma) * (1.0 + gamma));

    QuadratureConfig inner_cfg = cfg;
    inner_cfg.abs_tol = 0.1 * cfg.abs_tol;

    // Given x, y = gamma x + s_gamma t with t standard normal.
    auto inner = [&](double x) {
        auto f = [&](double t) {
            return norm_cdf((k - beta * (gamma * x + s_gamma * t)) / s_beta) * norm_pdf(t);
        };
        const double kink = beta * s_gamma != 0.0 ? (k / beta - gamma * x) / s_gamma : 0.0;
        const auto points = make_breakpoints(-kTruncation, kTruncation, {kink, 0.0});
        return integrate(f, std::span<const double>(points), inner_cfg).value;
    };
    auto outer = [&](double x) { return norm_cdf((h - alpha * x) / s_alpha) * norm_pdf(x) * inner(x); };
    const double kink = alpha != 0.0 ? h / alpha : 0.0;
    const auto points = make_breakpoints(-kTruncation, kTruncation, {kink, 0.0});
    return integrate(outer, std::span<const double>(points), cfg).value;
}

double copula_factor_integral_ab1(double u, double v, double alpha, double beta, const QuadratureConfig& cfg) {
    require_unit(u, "u");
    require_unit(v, "v");
    require_open_loading(alpha, "alpha");
    require_open_loading(beta, "beta");
    const double h = norm_quantile(u);
    const double k = norm_quantile(v);
    const double s_alpha = std::sqrt((1.0 - alpha) * (1.0 + alpha));
    const double s_beta = std::sqrt((1.0 - beta) * (1.0 + beta));
    auto f = [&](double z) {
        return norm_cdf((h - alpha * z) / s_alpha) * norm_cdf((k - beta * z) / s_beta) * norm_pdf(z);
    };
    const auto points = make_breakpoints(-kTruncation, kTruncation,
                                         {alpha != 0.0 ? h / alpha : 0.0, beta != 0.0 ? k / beta : 0.0, 0.0});
    return integrate(f, std::span<const double>(points), cfg).value;
}

namespace {

// int_{-inf}^{upper} Phi((y - r x)/s) phi(x) dx, the t = Phi(x) form of the partial integral.
double partial_integral(double upper_u, double other, Correlation rho, const QuadratureConfig& cfg) {
    require_unit(upper_u, "upper limit");
    require_unit(other, "fixed argument");
    require_interior(rho, "partial integral");
    if (upper_u == 0.0 || other == 0.0) return 0.0;
    const double r = rho.value();
    const double upper = std::min(norm_quantile(upper_u), kTruncation);
    if (upper <= -kTruncation) return 0.0;
    const double y = norm_quantile(other);
    if (std::isinf(y)) return norm_cdf(upper);
    auto f = [=](double x) { return conditional(x, y, r) * norm_pdf(x); };
    const auto points = make_breakpoints(-kTruncation, upper, {r != 0.0 ? y / r : 0.0, 0.0});
    return integrate(f, std::span<const double>(points), cfg).value;
}

}  // namespace

double copula_partial_integral_u(double u, double v, Correlation rho, const QuadratureConfig& cfg) {
    return partial_integral(u, v, rho, cfg);
}

double copula_partial_integral_v(double u, double v, Correlation rho, const QuadratureConfig& cfg) {
    return partial_integral(v, u, rho, cfg);
}

}  // namespace gausscop
