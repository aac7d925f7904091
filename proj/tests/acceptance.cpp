// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "gausscop/binorm.hpp"
#include "gausscop/concordance.hpp"
#include "gausscop/copula.hpp"
#include "gausscop/diag_bounds.hpp"
#include "gausscop/errors.hpp"
#include "gausscop/gauss_core.hpp"
#include "gausscop/oracle.hpp"
#include "gausscop/related_dists.hpp"

using namespace gausscop;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

const double kGrid[] = {-3.0, -1.5, -0.5, 0.0, 0.5, 1.5, 3.0};
const double kGridRho[] = {-0.95, -0.8, -0.6, -0.3, -0.05, 0.05, 0.3, 0.6, 0.8, 0.95};

Outcome centre_value() {
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double r = -0.99 + i * (1.98 / 40.0);
        const double exact = 0.25 + std::asin(r) / (2.0 * kPi);
        worst = std::max(worst, std::abs(copula_cdf(0.5, 0.5, r) - exact));
    }
    return {worst <= 1e-12, fmt("max error %.3g over 41 points", worst)};
}

Outcome cross_engine() {
    const Phi2Method engines[] = {Phi2Method::owen, Phi2Method::plackett_from_independence,
                                  Phi2Method::plackett_from_max, Phi2Method::tetrachoric,
                                  Phi2Method::single_factor_quadrature};
    double worst = 0.0;
    int compared = 0;
    for (double h : kGrid) {
        for (double k : kGrid) {
            for (double r : kGridRho) {
                std::vector<double> values;
                for (auto m : engines) {
                    if (m == Phi2Method::tetrachoric && std::abs(r) > 0.5) continue;
                    if (!engine_accepts(m, r)) continue;
                    values.push_back(phi2_cdf(h, k, r, m));
                }
                for (std::size_t i = 0; i < values.size(); ++i) {
                    for (std::size_t j = i + 1; j < values.size(); ++j) {
                        worst = std::max(worst, std::abs(values[i] - values[j]));
                        ++compared;
                    }
                }
            }
        }
    }
    return {worst <= 1e-9, fmt("max pairwise difference %.3g over %.0f pairs", worst, compared)};
}

Outcome oracle_agreement() {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> arg(-4.0, 4.0);
    std::uniform_real_distribution<double> corr(-0.99, 0.99);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double h = arg(rng);
        const double k = arg(rng);
        const double r = corr(rng);
        worst = std::max(worst, std::abs(phi2_cdf(h, k, r) - oracle::quad2d_phi2(h, k, r).value));
    }
    return {worst <= 1e-10, fmt("max error %.3g over 500 points", worst)};
}

Outcome symmetries() {
    std::mt19937_64 rng(1316);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> corr(-0.999, 0.999);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double u = unit(rng);
        const double v = unit(rng);
        const double r = corr(rng);
        const double c = copula_cdf(u, v, r);
        for (auto kind : {SymmetryKind::swap, SymmetryKind::reflect_v, SymmetryKind::reflect_u,
                          SymmetryKind::reflect_uv}) {
            worst = std::max(worst, std::abs(evaluate(apply_symmetry(kind, u, v, r)) - c));
        }
    }
    return {worst <= 1e-12, fmt("max residual %.3g over 1000 points", worst)};
}

Outcome reductions() {
    double uv = 0.0, diag = 0.0, line = 0.0, gtrafo = 0.0;
    for (int i = 1; i < 40; ++i) {
        const double u = i / 40.0;
        if (u == 0.5) continue;
        for (int j = 1; j < 40; ++j) {
            const double v = j / 40.0 + 0.003;
            for (double r = -0.95; r < 0.96; r += 0.1) {
                uv = std::max(uv, std::abs(evaluate(reduce_to_halflines(u, v, r)) - copula_cdf(u, v, r)));
            }
        }
    }
    for (double r = -0.99; r <= 0.99; r += 0.03) {
        for (double u = 0.01; u < 1.0; u += 0.02) {
            const double d = diag_cdf(u, r);
            diag = std::max(diag, std::abs(d - 2.0 * copula_cdf(u, 0.5, -std::sqrt((1.0 - r) / 2.0))));
            line = std::max(line, std::abs(line_from_diag(u, r) - copula_cdf(u, 0.5, r)));
            gtrafo = std::max(gtrafo, std::abs(diag_g_transform(u, r) - d));
        }
    }
    const double worst = std::max({uv, diag, line, gtrafo});
    char buf[256];
    std::snprintf(buf, sizeof buf, "uv->line %.3g, diag->line %.3g, line->diag %.3g, g-transform %.3g", uv, diag,
                  line, gtrafo);
    return {worst <= 1e-10, buf};
}

Outcome theorem1() {
    const auto lower = bound_error_scan(DiagBoundKind::lower_thm1, {101, 101});
    const auto upper = bound_error_scan(DiagBoundKind::upper_thm1, {101, 101});
    const bool pass = std::abs(lower.max_abs_error - 0.25) <= 1e-6 && lower.u_at_max == 0.5 &&
                      lower.rho_at_max == 1.0 && std::abs(upper.max_abs_error - 0.25) <= 1e-6 &&
                      upper.u_at_max == 0.5 && upper.rho_at_max == 0.0 && lower.lower_bound_holds() &&
                      upper.upper_bound_holds();
    char buf[256];
    std::snprintf(buf, sizeof buf, "lower %.10g at (%.4g, %.4g), upper %.10g at (%.4g, %.4g)", lower.max_abs_error,
                  lower.u_at_max, lower.rho_at_max, upper.max_abs_error, upper.u_at_max, upper.rho_at_max);
    return {pass, buf};
}

Outcome theorem2() {
    const auto upper = bound_error_scan(DiagBoundKind::upper_thm2);
    const auto lower = bound_error_scan(DiagBoundKind::lower_thm2);
    const double rho_star = std::sqrt(1.0 - 4.0 / (kPi * kPi));
    const bool pass = std::abs(upper.max_abs_error - 0.05263) <= 5e-4 && std::abs(upper.rho_at_max - rho_star) <= 1e-3 &&
                      std::abs(upper.u_at_max - 0.5) <= 1e-6 && lower.max_abs_error < 0.006;
    char buf[256];
    std::snprintf(buf, sizeof buf, "upper %.6g at (%.4g, %.6g), lower max %.4g", upper.max_abs_error, upper.u_at_max,
                  upper.rho_at_max, lower.max_abs_error);
    return {pass, buf};
}

Outcome theorem3() {
    const auto r = bound_error_scan(DiagBoundKind::upper_thm3);
    const bool pass = std::abs(r.max_abs_error - 0.015) <= 1e-3 && std::abs(r.rho_at_max - 0.5961) <= 5e-3 &&
                      std::abs(r.u_at_max - 0.5) <= 1e-6;
    return {pass, fmt("max error %.6g at u=%.4g, rho=%.6g", r.max_abs_error, r.u_at_max, r.rho_at_max)};
}

Outcome refined_approx() {
    const auto r = bound_error_scan(DiagApproxKind::meyer_refined);
    return {r.max_abs_error <= 6e-4, fmt("max error %.4g at u=%.4g, rho=%.4g", r.max_abs_error, r.u_at_max,
                                         r.rho_at_max)};
}

Outcome concordance() {
    const Measure measures[] = {Measure::blomqvist_beta, Measure::kendall_tau, Measure::spearman_rho,
                                Measure::gini_gamma, Measure::gamma_tilde};
    double numeric = 0.0, gini = 0.0, inversion = 0.0;
    for (auto m : measures) {
        for (double r : {-0.8, -0.5, -0.2, 0.2, 0.5, 0.8}) {
            numeric = std::max(numeric,
                               std::abs(measure_closed_form(m, r).value - measure_numeric(m, r).value));
        }
        for (double r = -0.999; r < 1.0; r += 0.0333) {
            inversion = std::max(inversion,
                                 std::abs(measure_invert(m, measure_closed_form(m, r).value).value() - r));
        }
    }
    for (double r = -1.0; r <= 1.0; r += 0.01) {
        const double g1 = gini_gamma_form1(r);
        gini = std::max({gini, std::abs(g1 - gini_gamma_form2(r)), std::abs(g1 - gini_gamma_form3(r))});
    }
    return {numeric <= 1e-6 && gini <= 1e-13 && inversion <= 1e-10,
            fmt("closed vs numeric %.3g, gini forms %.3g, inversion %.3g", numeric, gini, inversion)};
}

Outcome unit_integrals() {
    double diag = 0.0, half = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double r = -1.0 + 0.1 * i;
        diag = std::max(diag, std::abs(diag_integral(r) - diag_integral_closed(r)));
        half = std::max(half, std::abs(halfline_integral(r) - halfline_integral_closed(r)));
    }
    return {std::max(diag, half) <= 1e-8, fmt("diagonal %.3g, half-line %.3g over 21 rho", diag, half)};
}

Outcome factor_mc() {
    const oracle::FactorModel models[] = {
        {0.6, 0.7, 0.5, 0.3, 0.4},    {0.9, 0.8, 0.9, 0.05, 0.1},  {0.3, 0.4, -0.6, 0.5, 0.5},
        {0.5, 0.5, 0.97, 0.2, 0.7},    {0.95, 0.2, 0.3, 0.9, 0.1},  {0.7, 0.7, -0.9, 0.4, 0.6},
        {0.1, 0.9, 0.8, 0.01, 0.02},  {0.8, 0.6, 0.4, 0.75, 0.25}, {0.4, 0.9, -0.3, 0.15, 0.85},
        {0.99, 0.99, 0.99, 0.5, 0.5},
    };
    double worst_z = 0.0;
    std::uint64_t seed = 101;
    for (const auto& m : models) {
        const auto est = oracle::mc_factor_model(m, {1'000'000, seed++});
        const double exact = copula_cdf(m.u, m.v, m.alpha * m.beta * m.gamma);
        worst_z = std::max(worst_z, std::abs(est.joint - exact) / est.joint_std_error);
    }
    return {worst_z <= 4.0, fmt("max |z| %.3g over 10 configurations", worst_z)};
}

Outcome skew_normal() {
    const QuadratureConfig tight{1e-14, 1e-13, 400, 80};
    double worst = 0.0;
    for (double l : {-2.0, -0.5, 0.0, 0.5, 2.0}) {
        auto f = [l](double t) { return skew_normal_pdf(t, {l}); };
        for (double x = -3.0; x <= 3.0; x += 0.25) {
            const double direct = oracle::quad1d(f, -12.0, x, tight).value;
            const double a = skew_normal_cdf(x, {l});
            const double b = skew_normal_cdf_diagonal(x, {l});
            worst = std::max({worst, std::abs(a - direct), std::abs(b - direct), std::abs(a - b)});
        }
    }
    return {worst <= 1e-8, fmt("max disagreement %.3g", worst)};
}

Outcome vasicek() {
    const QuadratureConfig tight{1e-14, 1e-13, 400, 80};
    auto expectation = [&](const VasicekParams& params, const std::function<double(double)>& f) {
        auto integrand = [&](double t) {
            const double q = norm_cdf(t);
            if (q <= 0.0 || q >= 1.0) return 0.0;
            return f(q) * vasicek_pdf(q, params) * norm_pdf(t);
        };
        return oracle::quad1d(integrand, -38.0, 8.3, tight).value;
    };
    double moments = 0.0;
    for (double p : {0.01, 0.1, 0.5}) {
        for (double r : {0.05, 0.3, 0.5}) {
            const VasicekParams params{p, r};
            moments = std::max(moments, std::abs(expectation(params, [](double q) { return q; }) - p));
            moments = std::max(moments, std::abs(expectation(params, [](double q) { return q * q; }) -
                                                 copula_cdf(p, p, r)));
        }
    }
    // Rounding q itself moves the CDF by about eps * q * pdf(q); that term is added to the bound.
    double round_trip = 0.0;
    for (double p : {0.001, 0.05, 0.3, 0.8}) {
        for (double r : {0.01, 0.2, 0.5, 0.9}) {
            const VasicekParams params{p, r};
            for (double a = 0.001; a < 1.0; a += 0.0333) {
                const double q = vasicek_quantile(a, params);
                const double conditioning = 2.0 * std::numeric_limits<double>::epsilon() * q * vasicek_pdf(q, params);
                round_trip = std::max(round_trip, std::abs(vasicek_cdf(q, params) - a) - conditioning);
            }
        }
    }
    // d/dx log pdf(Phi(x)) in closed form; pdf'(q) is this times pdf(q) / phi(x). The absolute slope is
    // checked where the mode is away from 0 and 1, the scale-free probit slope everywhere.
    double slope = 0.0, probit_slope = 0.0;
    for (double p : {0.01, 0.1, 0.3, 0.7}) {
        for (double r : {0.05, 0.2, 0.35, 0.45}) {
            const VasicekParams params{p, r};
            const double q = *vasicek_mode(params).mode;
            const double x = norm_quantile(q);
            const double s = std::sqrt(1.0 - r);
            const double dlog = x - s * (s * x - norm_quantile(p)) / r;
            probit_slope = std::max(probit_slope, std::abs(dlog));
            if (std::min(q, 1.0 - q) > 1e-3) {
                slope = std::max(slope, std::abs(dlog * vasicek_pdf(q, params) / norm_pdf(x)));
            }
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "moments %.3g, round trip %.3g, |pdf'(mode)| %.3g, probit slope %.3g", moments,
                  round_trip, slope, probit_slope);
    return {moments <= 1e-7 && round_trip <= 1e-12 && slope <= 1e-6 && probit_slope <= 1e-6, buf};
}

Outcome tetrachoric() {
    QuadratureConfig cfg;
    cfg.series_max_terms = 60;
    double worst = 0.0;
    for (double h : kGrid) {
        for (double k : kGrid) {
            for (double r : kGridRho) {
                if (std::abs(r) > 0.5) continue;
                worst = std::max(worst, std::abs(phi2_cdf(h, k, r, Phi2Method::tetrachoric, cfg) - phi2_cdf(h, k, r)));
            }
        }
    }
    return {worst <= 1e-10, fmt("max difference %.3g", worst)};
}

struct Criterion {
    const char* name;
    Outcome (*run)();
    double time_limit_s;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"centre value C(1/2,1/2)", centre_value, 1.0},
        {"cross-engine agreement", cross_engine, 30.0},
        {"oracle agreement", oracle_agreement, 120.0},
        {"symmetries", symmetries, 0.0},
        {"reductions", reductions, 0.0},
        {"theorem 1 bounds", theorem1, 0.0},
        {"theorem 2 bounds", theorem2, 0.0},
        {"theorem 3 bound", theorem3, 0.0},
        {"refined diagonal approximation", refined_approx, 0.0},
        {"concordance measures", concordance, 0.0},
        {"unit-interval integrals", unit_integrals, 0.0},
        {"factor-model Monte Carlo", factor_mc, 60.0},
        {"skew-normal", skew_normal, 0.0},
        {"Vasicek", vasicek, 0.0},
        {"tetrachoric truncation", tetrachoric, 0.0},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0.0 && seconds >= c.time_limit_s) {
            outcome.pass = false;
            outcome.detail += fmt("; over time limit %.0f s", c.time_limit_s);
        }
        std::printf("%s %2d %-32s %s [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", index, c.name,
                    outcome.detail.c_str(), seconds);
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
