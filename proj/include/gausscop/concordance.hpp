#pragma once

#include <string_view>

#include "gausscop/binorm.hpp"

namespace gausscop {

enum class Measure { blomqvist_beta, kendall_tau, spearman_rho, gini_gamma, gamma_tilde };

std::string_view to_string(Measure measure);

/// Accepts the canonical names plus the short aliases beta, tau, spearman, gini, gamma_tilde.
Measure parse_measure(std::string_view name);

struct MeasureValue {
    Measure measure;
    double value;
    Correlation rho_source;
};

/// Tolerances used by default for the defining-integral checks.
inline constexpr QuadratureConfig kMeasureQuadrature{1e-11, 1e-11, 400, 80};

/// Arcsine closed forms; Gini's gamma uses the first of its three forms.
MeasureValue measure_closed_form(Measure measure, Correlation rho);

/// (2/pi)(asin((1+rho)/2) - asin((1-rho)/2)).
double gini_gamma_form1(Correlation rho);
/// (4/pi)(asin(sqrt(1+rho)/2) - asin(sqrt(1-rho)/2)).
double gini_gamma_form2(Correlation rho);
/// (4/pi) asin((sqrt((1+rho)(3+rho)) - sqrt((1-rho)(3-rho))) / 4).
double gini_gamma_form3(Correlation rho);

/**
 * Quadrature of each measure's defining integral, |rho| <= 0.99.
 *
 * Kendall uses 1 - 4 int int dC/du dC/dv with the closed-form conditionals;
 * Spearman integrates C - uv; Gini integrates the diagonal and its reflection;
 * gamma_tilde integrates the two half-lines; Blomqvist evaluates the centre.
 */
MeasureValue measure_numeric(Measure measure, Correlation rho, const QuadratureConfig& cfg = kMeasureQuadrature);

/// Correlation whose closed-form measure equals value; |value| <= 1.
Correlation measure_invert(Measure measure, double value);

/// int_0^1 C(u,u;rho) du = 1/4 + asin((1+rho)/2) / (2 pi).
double diag_integral_closed(Correlation rho);
/// The same integral as 1/2 - asin(sqrt(1-rho)/2) / pi.
double diag_integral_closed_alt(Correlation rho);
/// int_0^1 C(u,1/2;rho) du = 1/4 + asin(rho/sqrt 2) / (2 pi).
double halfline_integral_closed(Correlation rho);

/// Quadrature of int_0^1 C(u,u;rho) du.
double diag_integral(Correlation rho, const QuadratureConfig& cfg = kMeasureQuadrature);
/// Quadrature of int_0^1 C(u,1/2;rho) du.
double halfline_integral(Correlation rho, const QuadratureConfig& cfg = kMeasureQuadrature);

}  // namespace gausscop
