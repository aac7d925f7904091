#include "gausscop/diag_bounds.hpp"

#include <array>
#include <cmath>
#include <string>

#include "gausscop/copula.hpp"
#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"

namespace gausscop {

namespace {

constexpr std::array<std::pair<DiagBoundKind, std::string_view>, 5> kBoundNames{{
    {DiagBoundKind::lower_thm1, "lower_thm1"},
    {DiagBoundKind::upper_thm1, "upper_thm1"},
    {DiagBoundKind::lower_thm2, "lower_thm2"},
    {DiagBoundKind::upper_thm2, "upper_thm2"},
    {DiagBoundKind::upper_thm3, "upper_thm3"},
}};

constexpr std::array<std::pair<DiagApproxKind, std::string_view>, 5> kApproxNames{{
    {DiagApproxKind::mee_owen, "mee_owen"},
    {DiagApproxKind::cox_wermuth, "cox_wermuth"},
    {DiagApproxKind::mallows, "mallows"},
    {DiagApproxKind::meyer_tight, "meyer_tight"},
    {DiagApproxKind::meyer_refined, "meyer_refined"},
}};

void require_region(double u, double r) {
    if (!(u >= 0.0 && u <= 0.5)) throw DomainError("diagonal bounds need 0 <= u <= 1/2");
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("diagonal bounds need 0 <= rho <= 1");
}

// g(u; rho) extended to rho = 1, where it is 1/2 on (0, 1).
double g_closed(double u, double r) {
    if (u == 0.0) return 0.0;
    return norm_cdf(std::sqrt((1.0 - r) / (1.0 + r)) * norm_quantile(u));
}

double two_over_pi_asin(double r) {
    return 2.0 / kPi * std::asin(r);
}

}  // namespace

std::string_view to_string(DiagBoundKind kind) {
    for (const auto& [k, name] : kBoundNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::string_view to_string(DiagApproxKind kind) {
    for (const auto& [k, name] : kApproxNames) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::string_view to_string(const DiagTarget& target) {
    return std::visit([](auto kind) { return to_string(kind); }, target);
}

DiagTarget parse_diag_target(std::string_view name) {
    for (const auto& [k, n] : kBoundNames) {
        if (n == name) return k;
    }
    for (const auto& [k, n] : kApproxNames) {
        if (n == name) return k;
    }
    throw DomainError("unknown diagonal bound or approximation: " + std::string(name));
}

bool is_upper(DiagBoundKind kind) noexcept {
    return kind == DiagBoundKind::upper_thm1 || kind == DiagBoundKind::upper_thm2 ||
           kind == DiagBoundKind::upper_thm3;
}

double diag_bound(DiagBoundKind kind, double u, Correlation rho) {
    const double r = rho.value();
    require_region(u, r);
    const double ug = u * g_closed(u, r);
    switch (kind) {
        case DiagBoundKind::lower_thm1:
            return ug;
        case DiagBoundKind::upper_thm1:
            return 2.0 * ug;
        case DiagBoundKind::lower_thm2:
            return ug * (1.0 + two_over_pi_asin(r));
        case DiagBoundKind::upper_thm2:
            return ug * (1.0 + r);
        case DiagBoundKind::upper_thm3:
            return 2.0 * u * g_closed(0.5 * u, r);
    }
    throw DomainError("unknown bound kind");
}

double diag_approx(DiagApproxKind kind, double u, Correlation rho) {
    const double r = rho.value();
    require_region(u, r);
    if (u == 0.0) throw DomainError("diagonal approximations need u > 0");
    if (r == 0.0 && kind != DiagApproxKind::mee_owen) {
        throw DomainError("diagonal approximation needs rho > 0");
    }
    const double x = norm_quantile(u);
    const double density = norm_pdf(x);
    const double lambda = std::sqrt((1.0 - r) / (1.0 + r));
    const double a = two_over_pi_asin(r);
    switch (kind) {
        case DiagApproxKind::mee_owen: {
            const double mean = u * x + r * density;
            const double var = u * u - r * r * density * (u * x + density);
            return u * norm_cdf(mean / std::sqrt(var));
        }
        case DiagApproxKind::cox_wermuth: {
            // Phi at the conditional mean E[X | X <= x] = -phi(x)/u, spread sqrt(1 - rho^2).
            const double spread = std::sqrt((1.0 - r) * (1.0 + r));
            if (spread == 0.0) return u;
            return u * norm_cdf((u * x + r * density) / (spread * u));
        }
        case DiagApproxKind::mallows:
            return 2.0 * u * norm_cdf(lambda * (norm_quantile(0.5 * u + 0.25) - norm_quantile(0.75)));
        case DiagApproxKind::meyer_tight:
            return u * g_closed(u, r) * (1.0 + r + (2.0 * a - 2.0 * r) * u);
        case DiagApproxKind::meyer_refined:
            // Mean of lower_thm2 and meyer_tight; exact at u in {0, 1/2} and rho in {0, 1}.
            return u * g_closed(u, r) * (1.0 + 0.5 * r + 0.5 * a + (a - r) * u);
    }
    throw DomainError("unknown approximation kind");
}

double diag_target_value(const DiagTarget& target, double u, Correlation rho) {
    if (const auto* bound = std::get_if<DiagBoundKind>(&target)) return diag_bound(*bound, u, rho);
    return diag_approx(std::get<DiagApproxKind>(target), u, rho);
}

namespace {

struct Probe {
    const DiagTarget& target;
    ScanReport& report;

    // Signed error target - C, or NaN outside the target's domain.
    double signed_error(double u, double r) {
        try {
            const double value = diag_target_value(target, u, r);
            ++report.evaluations;
            return value - diag_cdf(u, r);
        } catch (const DomainError&) {
            return std::nan("");
        }
    }

    void record(double u, double r) {
        const double e = signed_error(u, r);
        if (std::isnan(e)) return;
        report.max_excess = std::max(report.max_excess, e);
        report.max_deficit = std::max(report.max_deficit, -e);
        if (std::abs(e) > report.max_abs_error) {
            report.max_abs_error = std::abs(e);
            report.u_at_max = u;
            report.rho_at_max = r;
        }
    }
};

// Maximises f on [lo, hi] by golden-section search.
template <class F>
double golden_max(F f, double lo, double hi, int iterations = 80) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations && b - a > 1e-12; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

ScanReport bound_error_scan(const DiagTarget& target, const ScanGrid& grid) {
    if (grid.n_u < 2 || grid.n_rho < 2 || !(grid.u_min >= 0.0 && grid.u_min < grid.u_max && grid.u_max <= 0.5) ||
        !(grid.rho_min >= 0.0 && grid.rho_min < grid.rho_max && grid.rho_max <= 1.0)) {
        throw DomainError("scan grid must lie inside [0, 1/2] x [0, 1] with at least 2 points per axis");
    }
    ScanReport report{target};
    Probe probe{target, report};

    const double du = (grid.u_max - grid.u_min) / (grid.n_u - 1);
    const double dr = (grid.rho_max - grid.rho_min) / (grid.n_rho - 1);
    for (int i = 0; i < grid.n_u; ++i) {
        const double u = i == grid.n_u - 1 ? grid.u_max : grid.u_min + i * du;
        for (int j = 0; j < grid.n_rho; ++j) {
            const double r = j == grid.n_rho - 1 ? grid.rho_max : grid.rho_min + j * dr;
            probe.record(u, r);
        }
    }

    if (grid.refine && report.max_abs_error > 0.0) {
        auto abs_error = [&probe](double u, double r) {
            const double e = probe.signed_error(u, r);
            return std::isnan(e) ? -1.0 : std::abs(e);
        };
        double u = report.u_at_max;
        double r = report.rho_at_max;
        for (int sweep = 0; sweep < 4; ++sweep) {
            const double r_lo = std::max(grid.rho_min, r - 2.0 * dr);
            const double r_hi = std::min(grid.rho_max, r + 2.0 * dr);
            const double r_new = golden_max([&](double x) { return abs_error(u, x); }, r_lo, r_hi);
            if (abs_error(u, r_new) > abs_error(u, r)) r = r_new;
            const double u_lo = std::max(grid.u_min, u - 2.0 * du);
            const double u_hi = std::min(grid.u_max, u + 2.0 * du);
            const double u_new = golden_max([&](double x) { return abs_error(x, r); }, u_lo, u_hi);
            if (abs_error(u_new, r) > abs_error(u, r)) u = u_new;
        }
        probe.record(u, r);
    }
    return report;
}

double theorem3_argmax_rho() {
    const double q = norm_quantile(0.25);
    auto f = [q](double r) {
        return -(1.0 + r) / (2.0 * kPi * q) - norm_pdf(std::sqrt((1.0 - r) / (1.0 + r)) * q);
    };
    // f(0.1) < 0 < f(0.9); bisection to machine precision.
    double lo = 0.1;
    double hi = 0.9;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace gausscop
