#pragma once

#include <optional>
#include <string_view>

#include "gausscop/binorm.hpp"

namespace gausscop {

// ---- skew-normal ----------------------------------------------------------

struct SkewNormalParams {
    double lambda = 0.0;
};

/// 2 phi(x) Phi(lambda x).
double skew_normal_pdf(double x, SkewNormalParams params);

/// 2 Phi2(x, 0; -lambda / sqrt(1 + lambda^2)).
double skew_normal_cdf(double x, SkewNormalParams params, Phi2Method method = Phi2Method::automatic,
                       const QuadratureConfig& cfg = {});

/// Diagonal form: Phi2(x, x; r) for lambda >= 0, 1 - Phi2(-x, -x; r) for lambda < 0,
/// with r = (1 - lambda^2) / (1 + lambda^2).
double skew_normal_cdf_diagonal(double x, SkewNormalParams params, Phi2Method method = Phi2Method::automatic,
                                const QuadratureConfig& cfg = {});

// ---- Vasicek --------------------------------------------------------------

/// Vasicek distribution: Phi^{-1}(P) ~ N(Phi^{-1}(p) / sqrt(1-rho), rho / (1-rho)).
class VasicekParams {
public:
    /// Throws DomainError unless p and rho lie in (0, 1).
    VasicekParams(double p, double rho);

    double p() const noexcept { return p_; }
    double rho() const noexcept { return rho_; }

private:
    double p_;
    double rho_;
};

enum class VasicekShape { unimodal, monotone, u_shaped };

std::string_view to_string(VasicekShape shape);

struct VasicekMode {
    VasicekShape shape;
    std::optional<double> mode;  ///< set only for the unimodal case
};

struct VasicekMoments {
    double mean;
    double second_moment;
    double variance;
};

double vasicek_cdf(double q, const VasicekParams& params);
double vasicek_quantile(double alpha, const VasicekParams& params);
double vasicek_pdf(double q, const VasicekParams& params);
VasicekMode vasicek_mode(const VasicekParams& params);

/// Mean and variance of Phi^{-1}(P).
double vasicek_probit_mean(const VasicekParams& params);
double vasicek_probit_variance(const VasicekParams& params);

/// E(P) = p, E(P^2) = C(p, p; rho).
VasicekMoments vasicek_moments(const VasicekParams& params);

/// cov(P, P~) = C(p, p~; gamma sqrt(rho rho~)) - p p~, gamma = corr(Phi^{-1}P, Phi^{-1}P~).
double vasicek_pair_cov(const VasicekParams& first, const VasicekParams& second, Correlation gamma,
                        Phi2Method method = Phi2Method::automatic, const QuadratureConfig& cfg = {});

}  // namespace gausscop
