#pragma once

#include <string>
#include <string_view>

#include "gausscop/quadrature.hpp"

namespace gausscop {

/// A correlation parameter validated to lie in [-1, 1].
class Correlation {
public:
    Correlation(double rho);  // NOLINT: validated implicit conversion

    double value() const noexcept { return rho_; }
    bool is_interior() const noexcept { return rho_ > -1.0 && rho_ < 1.0; }
    bool is_boundary() const noexcept { return rho_ == -1.0 || rho_ == 1.0; }

private:
    double rho_;
};

enum class Phi2Method {
    automatic,
    owen,
    plackett_from_independence,
    plackett_from_max,
    tetrachoric,
    single_factor_quadrature,
};

/// CLI/report name of a method ("auto", "owen", ...).
std::string_view to_string(Phi2Method method);

/// Inverse of to_string; throws DomainError on an unknown name.
Phi2Method parse_phi2_method(std::string_view name);

/// Largest |rho| the tetrachoric engine accepts.
inline constexpr double kTetrachoricMaxRho = 0.6;

/// Bivariate standard normal density; requires |rho| < 1.
double phi2_density(double x, double y, Correlation rho);

/**
 * Bivariate standard normal distribution function Phi2(h, k; rho).
 *
 * h and k may be infinite. rho in {-1, 0, 1} returns the closed-form limit
 * regardless of method. Otherwise the selected engine runs:
 *
 *  - owen: Owen's T decomposition; h = 0 or k = 0 uses the a -> inf limit.
 *  - plackett_from_independence: Phi(h)Phi(k) + int_0^rho phi2(h,k;r) dr.
 *  - plackett_from_max: Phi(min(h,k)) - int_rho^1 phi2(h,k;r) dr with
 *    r = 1 - (1-rho)s^2; negative rho goes through C(u,v;rho) = u - C(u,1-v;-rho).
 *  - tetrachoric: Mehler's Hermite series, |rho| <= 0.6 only (EngineRejected).
 *  - single_factor_quadrature: E[Phi((h-aZ)/s) Phi((k-bZ)/s)] with ab = rho;
 *    96-point Gauss-Hermite for |rho| <= 0.7, adaptive quadrature above.
 *  - automatic: plackett_from_independence for |rho| <= 0.8, else plackett_from_max.
 *
 * The result is clamped to the Frechet bounds. Throws ConvergenceError when
 * cfg limits are exhausted.
 */
double phi2_cdf(double h, double k, Correlation rho, Phi2Method method = Phi2Method::automatic,
                const QuadratureConfig& cfg = {});

/// phi2_cdf with the automatic dispatch.
double phi2_auto(double h, double k, Correlation rho, const QuadratureConfig& cfg = {});

/// Whether an engine accepts this correlation.
bool engine_accepts(Phi2Method method, double rho) noexcept;

}  // namespace gausscop
