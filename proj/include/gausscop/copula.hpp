#pragma once

#include "gausscop/binorm.hpp"

namespace gausscop {

/// Arguments (u, v) of the copula.
struct UnitPoint {
    double u;
    double v;
};

enum class SymmetryKind { swap, reflect_v, reflect_u, reflect_uv };

/// C(u, v; rho) == offset + sign * C(point.u, point.v; rho') for the chosen symmetry.
struct SymmetricForm {
    UnitPoint point;
    Correlation rho;
    double offset;
    double sign;
};

/**
 * One side of the half-line reduction
 * C(u, v; rho) = C(u, 1/2; rho_u) + C(v, 1/2; rho_v) - delta.
 */
struct HalflineReduction {
    double u;
    Correlation rho_u;
    double v;
    Correlation rho_v;
    double delta;
};

/// The bivariate normal copula. Boundary values of u, v and rho in {-1, 0, 1}
/// are returned in closed form before any quantile transform.
double copula_cdf(double u, double v, Correlation rho, Phi2Method method = Phi2Method::automatic,
                  const QuadratureConfig& cfg = {});

/// Copula density, exponential closed form. Requires u, v in (0, 1) and |rho| < 1.
double copula_density(double u, double v, Correlation rho);

/// Copula density as phi2(x, y; rho) / (phi(x) phi(y)).
double copula_density_ratio(double u, double v, Correlation rho);

/// dC/du = P(V <= v | U = u).
double cond_cdf_given_u(double u, double v, Correlation rho);

/// dC/dv = P(U <= u | V = v).
double cond_cdf_given_v(double u, double v, Correlation rho);

SymmetricForm apply_symmetry(SymmetryKind kind, double u, double v, Correlation rho);

/// offset + sign * C(point; rho').
double evaluate(const SymmetricForm& form, Phi2Method method = Phi2Method::automatic,
                const QuadratureConfig& cfg = {});

/// g(u; rho) = Phi(sqrt((1-rho)/(1+rho)) * Phi^{-1}(u)); g(0) = 0 and g(1) = 1.
double diag_g(double u, Correlation rho);

/// C(u, u; rho) via u - 2 T(Phi^{-1}(u), sqrt((1-rho)/(1+rho))).
double diag_cdf(double u, Correlation rho);

/// C(u, u; rho) as 2 * int_0^u g(t; rho) dt.
double diag_cdf_integral(double u, Correlation rho, const QuadratureConfig& cfg = {});

/// C(u, 1/2; rho) via u/2 - T(Phi^{-1}(u), -rho / sqrt(1 - rho^2)).
double halfline_cdf(double u, Correlation rho);

/// Throws SingularParameter when u or v is exactly 1/2 or |rho| = 1.
HalflineReduction reduce_to_halflines(double u, double v, Correlation rho);

double evaluate(const HalflineReduction& reduction);

/// C(u, 1/2; rho) recovered from the diagonal at correlation 1 - 2 rho^2.
double line_from_diag(double u, Correlation rho);

/// C(u, u; rho) = 2u g(u; rho) - C(g, g; -rho) with g = g(u; rho).
double diag_g_transform(double u, Correlation rho);

/**
 * C(u, v; alpha*beta*gamma) as the double integral
 * int int Phi((h - alpha x)/sqrt(1-alpha^2)) Phi((k - beta y)/sqrt(1-beta^2)) phi2(x, y; gamma).
 * alpha, beta, gamma must lie in (-1, 1).
 */
double copula_factor_integral(double u, double v, double alpha, double beta, double gamma,
                              const QuadratureConfig& cfg = {});

/// The gamma -> 1 limit: a single integral against phi(z), with alpha*beta = rho.
double copula_factor_integral_ab1(double u, double v, double alpha, double beta,
                                  const QuadratureConfig& cfg = {});

/// int_0^u dC(t, v; rho)/dt dt.
double copula_partial_integral_u(double u, double v, Correlation rho, const QuadratureConfig& cfg = {});

/// int_0^v dC(u, t; rho)/dt dt.
double copula_partial_integral_v(double u, double v, Correlation rho, const QuadratureConfig& cfg = {});

}  // namespace gausscop
