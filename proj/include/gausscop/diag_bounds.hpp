#pragma once

#include <string_view>
#include <variant>

#include "gausscop/binorm.hpp"

namespace gausscop {

// Bounds and approximations for C(u, u; rho) on 0 <= u <= 1/2, 0 <= rho <= 1.

enum class DiagBoundKind { lower_thm1, upper_thm1, lower_thm2, upper_thm2, upper_thm3 };

enum class DiagApproxKind { mee_owen, cox_wermuth, mallows, meyer_tight, meyer_refined };

using DiagTarget = std::variant<DiagBoundKind, DiagApproxKind>;

std::string_view to_string(DiagBoundKind kind);
std::string_view to_string(DiagApproxKind kind);
std::string_view to_string(const DiagTarget& target);

/// Parses any bound or approximation name; throws DomainError if unknown.
DiagTarget parse_diag_target(std::string_view name);

/// Upper bounds lie above the diagonal section, lower bounds below it.
bool is_upper(DiagBoundKind kind) noexcept;

/// Throws DomainError outside 0 <= u <= 1/2, 0 <= rho <= 1.
double diag_bound(DiagBoundKind kind, double u, Correlation rho);

/// Mee-Owen also accepts rho = 0; the others need rho > 0, all need 0 < u <= 1/2.
double diag_approx(DiagApproxKind kind, double u, Correlation rho);

double diag_target_value(const DiagTarget& target, double u, Correlation rho);

struct ScanGrid {
    int n_u = 200;
    int n_rho = 200;
    double u_min = 0.0;
    double u_max = 0.5;
    double rho_min = 0.0;
    double rho_max = 1.0;
    bool refine = true;
};

struct ScanReport {
    DiagTarget target;
    double max_abs_error = 0.0;
    double u_at_max = 0.0;
    double rho_at_max = 0.0;
    /// max of (target - C) and max of (C - target) over the grid.
    double max_excess = 0.0;
    double max_deficit = 0.0;
    int evaluations = 0;

    /// target >= C everywhere on the scanned grid (up to rounding slack).
    bool upper_bound_holds() const noexcept { return max_deficit <= 1e-13; }
    bool lower_bound_holds() const noexcept { return max_excess <= 1e-13; }
};

/**
 * Maximum |target - C(u,u;rho)| over a grid, followed (if grid.refine) by
 * alternating golden-section searches in rho and u around the coarse argmax.
 * Grid points that fall outside a target's domain are skipped.
 */
ScanReport bound_error_scan(const DiagTarget& target, const ScanGrid& grid = {});

/// Root of -(1+rho)/(2 pi Phi^{-1}(1/4)) = phi(sqrt((1-rho)/(1+rho)) Phi^{-1}(1/4)).
double theorem3_argmax_rho();

}  // namespace gausscop
