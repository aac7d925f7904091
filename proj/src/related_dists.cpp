#include "gausscop/related_dists.hpp"

#include <cmath>

#include "gausscop/copula.hpp"
#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"

namespace gausscop {

namespace {

void require_finite_lambda(SkewNormalParams params) {
    if (!std::isfinite(params.lambda)) throw DomainError("skew-normal lambda must be finite");
}

void require_open_unit(double x, const char* what) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(what) + " must lie in (0, 1)");
}

}  // namespace

double skew_normal_pdf(double x, SkewNormalParams params) {
    require_finite_lambda(params);
    return 2.0 * norm_pdf(x) * norm_cdf(params.lambda * x);
}

double skew_normal_cdf(double x, SkewNormalParams params, Phi2Method method, const QuadratureConfig& cfg) {
    require_finite_lambda(params);
    if (std::isnan(x)) throw DomainError("skew_normal_cdf: NaN argument");
    const double l = params.lambda;
    return 2.0 * phi2_cdf(x, 0.0, -l / std::sqrt(1.0 + l * l), method, cfg);
}

double skew_normal_cdf_diagonal(double x, SkewNormalParams params, Phi2Method method,
                                const QuadratureConfig& cfg) {
    require_finite_lambda(params);
    if (std::isnan(x)) throw DomainError("skew_normal_cdf_diagonal: NaN argument");
    const double l2 = params.lambda * params.lambda;
    const Correlation r = (1.0 - l2) / (1.0 + l2);
    if (params.lambda >= 0.0) return phi2_cdf(x, x, r, method, cfg);
    return 1.0 - phi2_cdf(-x, -x, r, method, cfg);
}

VasicekParams::VasicekParams(double p, double rho) : p_(p), rho_(rho) {
    require_open_unit(p, "Vasicek p");
    require_open_unit(rho, "Vasicek rho");
}

std::string_view to_string(VasicekShape shape) {
    switch (shape) {
        case VasicekShape::unimodal:
            return "unimodal";
        case VasicekShape::monotone:
            return "monotone";
        case VasicekShape::u_shaped:
            return "u_shaped";
    }
    return "unknown";
}

double vasicek_cdf(double q, const VasicekParams& params) {
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("vasicek_cdf: q must lie in [0, 1]");
    if (q == 0.0) return 0.0;
    if (q == 1.0) return 1.0;
    const double r = params.rho();
    return norm_cdf((std::sqrt(1.0 - r) * norm_quantile(q) - norm_quantile(params.p())) / std::sqrt(r));
}

double vasicek_quantile(double alpha, const VasicekParams& params) {
    require_open_unit(alpha, "vasicek_quantile: alpha");
    const double r = params.rho();
    return norm_cdf((std::sqrt(r) * norm_quantile(alpha) + norm_quantile(params.p())) / std::sqrt(1.0 - r));
}

double vasicek_pdf(double q, const VasicekParams& params) {
    require_open_unit(q, "vasicek_pdf: q");
    const double r = params.rho();
    const double x = norm_quantile(q);
    const double z = (std::sqrt(1.0 - r) * x - norm_quantile(params.p())) / std::sqrt(r);
    return std::sqrt((1.0 - r) / r) * std::exp(0.5 * (x * x - z * z));
}

VasicekMode vasicek_mode(const VasicekParams& params) {
    const double r = params.rho();
    if (r == 0.5) return {VasicekShape::monotone, std::nullopt};
    if (r > 0.5) return {VasicekShape::u_shaped, std::nullopt};
    return {VasicekShape::unimodal, norm_cdf(std::sqrt(1.0 - r) / (1.0 - 2.0 * r) * norm_quantile(params.p()))};
}

double vasicek_probit_mean(const VasicekParams& params) {
    return norm_quantile(params.p()) / std::sqrt(1.0 - params.rho());
}

double vasicek_probit_variance(const VasicekParams& params) {
    return params.rho() / (1.0 - params.rho());
}

VasicekMoments vasicek_moments(const VasicekParams& params) {
    const double p = params.p();
    const double second = diag_cdf(p, params.rho());
    return {p, second, second - p * p};
}

double vasicek_pair_cov(const VasicekParams& first, const VasicekParams& second, Correlation gamma,
                        Phi2Method method, const QuadratureConfig& cfg) {
    const double r = gamma.value() * std::sqrt(first.rho() * second.rho());
    return copula_cdf(first.p(), second.p(), r, method, cfg) - first.p() * second.p();
}

}  // namespace gausscop
