#include "simnitm/ode_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "simnitm/error.hpp"

namespace simnitm {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::StepLimit: return "StepLimit";
    case ErrorKind::NonPositiveRadicand: return "NonPositiveRadicand";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NoExtremum: return "NoExtremum";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::MaxIterations: return "MaxIterations";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

void IntegratorConfig::validate() const {
  const bool ok = rel_tol > 0.0 && abs_tol > 0.0 && initial_step > 0.0 && max_steps > 0 &&
                  plateau_tol > 0.0;
  if (!ok) {
    throw SolverError(ErrorKind::InvalidArgument,
                      "integrator configuration: tolerances, step and limits must be positive");
  }
}

namespace {

using State = std::array<double, 3>;  // f, f', f''

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

// PI controller constants (Hairer & Wanner's DOPRI5 defaults).
constexpr double kSafety = 0.9;
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - 0.75 * kBeta;
constexpr double kFacMin = 0.2;   // largest shrink is 1/5
constexpr double kFacMax = 10.0;  // largest growth

State rhs(const OdeField& field, const State& y) {
  return {y[1], y[2], field.third_derivative(y[0], y[1], y[2])};
}

bool all_finite(const State& y) {
  return std::isfinite(y[0]) && std::isfinite(y[1]) && std::isfinite(y[2]);
}

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [w, k] : terms) {
    for (std::size_t i = 0; i < 3; ++i) {
      out[i] += h * w * (*k)[i];
    }
  }
  return out;
}

}  // namespace

Trajectory integrate_ivp(const OdeField& field, const IvpState& y0, double eta_inf,
                         const IntegratorConfig& cfg) {
  cfg.validate();
  if (y0.eta != 0.0) {
    throw SolverError(ErrorKind::InvalidArgument, "initial state must sit at eta = 0");
  }
  if (!(eta_inf > 0.0) || !std::isfinite(eta_inf)) {
    throw SolverError(ErrorKind::InvalidArgument, "truncated boundary must be positive");
  }

  State y{y0.f, y0.df, y0.d2f};
  if (!all_finite(y)) {
    throw SolverError(ErrorKind::NonFinite, "non-finite initial state");
  }

  Trajectory traj;
  traj.samples.push_back(y0);

  double eta = 0.0;
  double h = std::min(cfg.initial_step, eta_inf);
  double err_old = 1e-4;
  bool last_rejected = false;
  State k1 = rhs(field, y);

  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt >= cfg.max_steps) {
      throw SolverError(ErrorKind::StepLimit,
                        "step limit of " + std::to_string(cfg.max_steps) + " exceeded at eta = " +
                            std::to_string(eta));
    }
    if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, eta)) {
      throw SolverError(ErrorKind::NonFinite,
                        "step size collapsed at eta = " + std::to_string(eta) +
                            " (solution blow-up)");
    }
    const bool final_step = eta + 1.01 * h >= eta_inf;
    if (final_step) {
      h = eta_inf - eta;
    }

    const State k2 = rhs(field, axpy(y, h, {{a21, &k1}}));
    const State k3 = rhs(field, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(field, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(field, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 =
        rhs(field, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new =
        axpy(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    const State k7 = rhs(field, y_new);

    double err = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
      const double scale = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err += (e / scale) * (e / scale);
    }
    err = std::sqrt(err / 3.0);
    if (!std::isfinite(err) || !all_finite(k7)) {
      err = std::numeric_limits<double>::infinity();
    }

    if (err <= 1.0) {
      eta = final_step ? eta_inf : eta + h;
      y = y_new;
      k1 = k7;
      traj.samples.push_back({eta, y[0], y[1], y[2]});
      if (final_step) {
        break;
      }
      double fac = std::pow(err, kExpo) / std::pow(err_old, kBeta) / kSafety;
      fac = std::clamp(fac, 1.0 / kFacMax, 1.0 / kFacMin);
      double h_new = h / fac;
      if (last_rejected) {
        h_new = std::min(h_new, h);
      }
      err_old = std::max(err, 1e-4);
      last_rejected = false;
      h = h_new;
    } else {
      const double shrink =
          std::isfinite(err) ? std::min(1.0 / kFacMin, std::pow(err, kExpo) / kSafety)
                             : 1.0 / kFacMin;
      h /= shrink;
      last_rejected = true;
    }
  }

  const IvpState& last = traj.samples.back();
  traj.eta_inf = eta_inf;
  traj.df_terminal = last.df;
  traj.plateau_ok = std::abs(last.d2f) < cfg.plateau_tol;
  return traj;
}

TruncationChoice estimate_truncated_boundary(const OdeField& field, const IvpState& y0,
                                             const IntegratorConfig& cfg,
                                             std::span<const double> eta_candidates) {
  if (eta_candidates.empty()) {
    throw SolverError(ErrorKind::InvalidArgument, "no truncated-boundary candidates");
  }
  if (!std::is_sorted(eta_candidates.begin(), eta_candidates.end()) ||
      std::adjacent_find(eta_candidates.begin(), eta_candidates.end()) != eta_candidates.end()) {
    throw SolverError(ErrorKind::InvalidArgument, "candidates must be strictly increasing");
  }

  std::vector<Trajectory> runs;
  runs.reserve(eta_candidates.size());
  for (double eta_inf : eta_candidates) {
    runs.push_back(integrate_ivp(field, y0, eta_inf, cfg));
  }
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const double drift = std::abs(runs[i + 1].df_terminal - runs[i].df_terminal);
    if (runs[i].plateau_ok && drift < cfg.plateau_tol) {
      return {eta_candidates[i], false};
    }
  }
  return {eta_candidates.back(), true};
}

}  // namespace simnitm
