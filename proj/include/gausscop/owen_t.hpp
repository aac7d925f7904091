#pragma once

namespace gausscop {

/**
 * Owen's T-function T(h, a) = (1/2pi) * int_0^a exp(-h^2 (1+x^2)/2) / (1+x^2) dx.
 *
 * Even in h, odd in a, |T| <= 1/4. |a| <= 1 is integrated directly with
 * panelled 20-point Gauss-Legendre; |a| > 1 goes through the complement
 * T(h,a) = [Phi(h)Q(ah) + Phi(ah)Q(h)]/2 - T(ah, 1/a) for h >= 0.
 * Infinite a is forwarded to owen_t_unbounded.
 */
double owen_t(double h, double a);

/// Limit of owen_t(h, a) as a -> sign * infinity, i.e. sign * (1 - Phi(|h|)) / 2.
/// sign must be +1 or -1.
double owen_t_unbounded(double h, int sign);

}  // namespace gausscop
