#pragma once

#include <cstdint>
#include <functional>

#include "gausscop/binorm.hpp"

// Slow reference implementations for tests and the compare command. Nothing
// here shares code with the production integrator.
namespace gausscop::oracle {

struct OracleResult {
    double value;
    double error;
};

/// Adaptive 61-point Gauss-Kronrod (Boost.Math). Infinite limits are allowed.
/// Throws ConvergenceError if the estimate exceeds max(cfg.abs_tol, rel_tol * |I|).
OracleResult quad1d(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg = {});

/**
 * Phi2 by nested adaptive quadrature of the density over [-9, h] x [-9, k].
 * The truncated tail mass 2 Phi(-9) is added to the error estimate.
 * Requires |rho| < 1.
 */
OracleResult quad2d_phi2(double h, double k, Correlation rho, const QuadratureConfig& cfg = {1e-13, 1e-13, 400, 80});

struct McConfig {
    std::uint64_t n_paths = 1'000'000;
    std::uint64_t seed = 20240601;
};

/// X = alpha Y + sqrt(1-alpha^2) eps, X~ = beta Y~ + sqrt(1-beta^2) eps~, corr(Y, Y~) = gamma.
struct FactorModel {
    double alpha;
    double beta;
    double gamma;
    double u;
    double v;
};

struct McEstimate {
    double joint;            ///< mean of Z * Z~, estimates C(u, v; alpha beta gamma)
    double joint_std_error;
    double mean_p;           ///< mean of P(Y) = Phi((Phi^{-1}(u) - alpha Y)/sqrt(1-alpha^2)), estimates u
    double mean_p_std_error;
    std::uint64_t paths;
};

/// Deterministic for a fixed seed: paths are drawn in fixed-size blocks, each
/// with its own generator seeded from (seed, block index).
McEstimate mc_factor_model(const FactorModel& model, const McConfig& mc = {});

}  // namespace gausscop::oracle
