#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace simnitm {

/// Right-hand side of f''' + c f f'' + P (1 - f'^2) [fs_term] = 0.
struct OdeField {
  double c = 0.5;
  bool fs_term = false;  // Falkner-Skan pressure-gradient term
  double P = 0.0;

  [[nodiscard]] double third_derivative(double f, double df, double d2f) const noexcept {
    double rhs = -c * f * d2f;
    if (fs_term) {
      rhs -= P * (1.0 - df * df);
    }
    return rhs;
  }
};

struct IvpState {
  double eta = 0.0;
  double f = 0.0;
  double df = 0.0;
  double d2f = 0.0;
};

struct Trajectory {
  std::vector<IvpState> samples;
  double eta_inf = 0.0;
  double df_terminal = 0.0;
  bool plateau_ok = false;

  [[nodiscard]] const IvpState& front() const { return samples.front(); }
  [[nodiscard]] const IvpState& back() const { return samples.back(); }
};

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double initial_step = 1e-3;
  std::size_t max_steps = 1'000'000;
  double plateau_tol = 1e-6;

  /// Throws SolverError(InvalidArgument) unless every field is positive.
  void validate() const;
};

/// Adaptive Dormand-Prince 5(4) integration of the third-order IVP on
/// [0, eta_inf]. Samples are the accepted steps; the last one sits exactly
/// on eta_inf.
///
/// Throws SolverError with NonFinite when the solution leaves the finite
/// range (or the step collapses), StepLimit when cfg.max_steps is exhausted.
Trajectory integrate_ivp(const OdeField& field, const IvpState& y0, double eta_inf,
                         const IntegratorConfig& cfg);

struct TruncationChoice {
  double eta_inf = 0.0;
  bool flagged = false;  // no candidate met the plateau criterion
};

/// Smallest candidate whose trajectory has flattened (|f''| < plateau_tol)
/// and whose df_terminal moves by less than plateau_tol at the next
/// candidate. Falls back to the largest candidate, flagged.
TruncationChoice estimate_truncated_boundary(const OdeField& field, const IvpState& y0,
                                             const IntegratorConfig& cfg,
                                             std::span<const double> eta_candidates);

}  // namespace simnitm
