#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simnitm/error.hpp"
#include "simnitm/problems.hpp"
#include "simnitm/scaling.hpp"

namespace simnitm {

/// Truncated boundaries the automatic choice picks from, per family.
std::vector<double> default_eta_candidates(Family family);

/// Truncated boundary used when the caller fixes one (star variables).
double default_eta_inf(Family family);

/// One star IVP integration plus the family's rescale. Throws
/// Unsupported, NonPositiveRadicand, NonFinite or StepLimit.
ScaledSolution solve_noniterative(const SimilarityProblem& p, const IntegratorConfig& cfg,
                                  double eta_inf);

/// As above with eta_inf chosen by estimate_truncated_boundary.
ScaledSolution solve_auto_truncation(const SimilarityProblem& p, const IntegratorConfig& cfg,
                                     std::span<const double> eta_candidates);

enum class SignPolicy { Plus, Minus, Auto };

struct SweepRow {
  double P_star = 0.0;
  Sign sign = Sign::Plus;
  double df_star_inf = 0.0;
  double lambda = 0.0;
  double P_physical = 0.0;
  double f0 = 0.0;
  double d2f0 = 0.0;
  double eta_inf_used = 0.0;
  bool plateau_ok = false;
  std::optional<ErrorKind> status;  // set when the solve failed

  [[nodiscard]] bool ok() const noexcept { return !status.has_value(); }
};

struct SweepOptions {
  SignPolicy sign = SignPolicy::Plus;
  std::optional<double> eta_inf;  // nullopt: automatic choice per row
  IntegratorConfig cfg;
  unsigned threads = 1;
};

/// One row per P*, in input order. Failed solves become rows with a status.
std::vector<SweepRow> sweep(Family family, std::span<const double> P_star_values,
                            const SweepOptions& opts);

SweepRow to_sweep_row(const ScaledSolution& sol, Sign sign);

struct CriticalResult {
  double P_c = 0.0;
  double P_star_at_Pc = 0.0;
  std::pair<double, double> bracket;
  int iterations = 0;
  double d2f0_at_Pc = 0.0;
};

/// Golden-section minimization of P(P*) on the bracket. Throws NoExtremum
/// when the minimizer sits on a bracket end (P monotone there).
CriticalResult find_critical_parameter(Family family, Sign sign, std::pair<double, double> bracket,
                                       const IntegratorConfig& cfg, double eta_inf,
                                       double P_star_tol = 1e-6);

struct TargetOptions {
  double P_tol = 1e-6;
  double bisection_width = 1e-3;  // switch to secant below this bracket width
  int max_iterations = 100;
};

/// Finds P* with |P(P*) - P_target| < P_tol. Throws NoSignChange or MaxIterations.
ScaledSolution solve_for_target_P(Family family, double P_target, Sign sign,
                                  std::pair<double, double> P_star_bracket,
                                  const IntegratorConfig& cfg, double eta_inf,
                                  const TargetOptions& opts = {});

struct DualOptions {
  std::pair<double, double> fold_bracket{-1.5, -1.0};
  double far_P_star = -500.0;  // outer end of the lower branch
  double fold_tol = 1e-3;      // targets this close below P_c snap to the fold
  TargetOptions target;
};

/// The two moving-wall solutions sharing P_target in (P_c, 0): first from the
/// branch below the fold in P*, second from the branch above it.
std::pair<ScaledSolution, ScaledSolution> dual_solutions(double P_target,
                                                         const IntegratorConfig& cfg,
                                                         double eta_inf,
                                                         const DualOptions& opts = {});

struct ResidualReport {
  double ode_max = 0.0;
  std::vector<std::string> bc_labels;
  std::vector<double> bc_errors;

  [[nodiscard]] double bc_max() const noexcept;
  [[nodiscard]] bool passes(double tol) const noexcept;
};

/// Integrator settings for the residual oracle's independent re-integration.
IntegratorConfig reintegration_config();

/// Independent check of a physical solution: the ODE residual with f'''
/// from five-point differences of f'' on the sample grid, the wall
/// conditions on the recovered initial values, and the asymptotic
/// condition both on the trajectory and on a fresh integration of the
/// physical IVP from (f0, df0, d2f0).
ResidualReport bvp_residual(const ScaledSolution& sol, const SimilarityProblem& p,
                            const IntegratorConfig& reintegration = reintegration_config());

}  // namespace simnitm
