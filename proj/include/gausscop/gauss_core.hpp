#pragma once

// Univariate standard normal kernel shared by every other module.

namespace gausscop {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934381868;
inline constexpr double kSqrt2 = 1.414213562373095048801688724209698079;

/// Standard normal density.
double norm_pdf(double x) noexcept;

/// Standard normal distribution function. Accepts ±infinity.
double norm_cdf(double x) noexcept;

/// Upper tail 1 - norm_cdf(x), computed without cancellation.
double norm_sf(double x) noexcept;

/**
 * Inverse of norm_cdf.
 *
 * Acklam's rational approximation followed by one Halley step against
 * norm_cdf. p = 0 and p = 1 map to -inf and +inf; anything outside [0, 1]
 * (or NaN) throws DomainError.
 */
double norm_quantile(double p);

/// Mills' ratio (1 - Phi(x)) / phi(x). Uses a continued fraction for x >= 6.
double mills_ratio(double x) noexcept;

/// x * mills_ratio(x); increases from H(0) = 0 towards 1 on x > 0.
double h_function(double x) noexcept;

/// Probabilists' Hermite polynomial He_k(x) via the three-term recurrence.
double hermite_he(unsigned k, double x) noexcept;

}  // namespace gausscop
