#include "simnitm/analysis.hpp"
#include "simnitm/finite_difference.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace simnitm {

std::vector<double> default_eta_candidates(Family family) {
  if (family == Family::Gasification) {
    return {5.0, 10.0, 15.0};
  }
  return {10.0, 15.0, 20.0};
}

double default_eta_inf(Family family) { return family == Family::Gasification ? 10.0 : 15.0; }

namespace {

void require_solvable(const SimilarityProblem& p) {
  if (!p.solvable()) {
    throw SolverError(ErrorKind::Unsupported, "family not solvable by non-ITM");
  }
}

SimilarityProblem make_problem(Family family, double P_star, Sign sign) {
  switch (family) {
    case Family::MovingWall: return SimilarityProblem::moving_wall(P_star, sign);
    case Family::Gasification: return SimilarityProblem::gasification(P_star);
    case Family::ClassicBlasius: return SimilarityProblem::classic_blasius(0.5);
    case Family::FalknerSkan: break;
  }
  throw SolverError(ErrorKind::Unsupported, "family not solvable by non-ITM");
}

ScaledSolution rescale(const SimilarityProblem& p, const Trajectory& star, const IvpState& ics) {
  if (p.family == Family::Gasification) {
    return rescale_gasification(star, p.P_star, lambda_gasification(star.df_terminal));
  }
  ScaledSolution sol =
      rescale_moving_wall(star, ics, p.P_star, lambda_moving_wall(star.df_terminal, p.P_star));
  sol.family = p.family;
  return sol;
}

}  // namespace

ScaledSolution solve_noniterative(const SimilarityProblem& p, const IntegratorConfig& cfg,
                                  double eta_inf) {
  require_solvable(p);
  const IvpState ics = star_initial_conditions(p);
  const Trajectory star = integrate_ivp(p.field(), ics, eta_inf, cfg);
  return rescale(p, star, ics);
}

ScaledSolution solve_auto_truncation(const SimilarityProblem& p, const IntegratorConfig& cfg,
                                     std::span<const double> eta_candidates) {
  require_solvable(p);
  const IvpState ics = star_initial_conditions(p);
  const TruncationChoice choice = estimate_truncated_boundary(p.field(), ics, cfg, eta_candidates);
  return solve_noniterative(p, cfg, choice.eta_inf);
}

SweepRow to_sweep_row(const ScaledSolution& sol, Sign sign) {
  SweepRow row;
  row.P_star = sol.P_star;
  row.sign = sign;
  row.df_star_inf = sol.df_star_inf;
  row.lambda = sol.lambda;
  row.P_physical = sol.P_physical;
  row.f0 = sol.f0;
  row.d2f0 = sol.d2f0;
  row.eta_inf_used = sol.star_eta_inf;
  row.plateau_ok = sol.trajectory.plateau_ok;
  return row;
}

namespace {

SweepRow sweep_one(Family family, double P_star, const SweepOptions& opts) {
  const auto attempt = [&](Sign sign) {
    const SimilarityProblem p = make_problem(family, P_star, sign);
    if (opts.eta_inf) {
      return to_sweep_row(solve_noniterative(p, opts.cfg, *opts.eta_inf), sign);
    }
    const std::vector<double> candidates = default_eta_candidates(family);
    return to_sweep_row(solve_auto_truncation(p, opts.cfg, candidates), sign);
  };
  const Sign first = opts.sign == SignPolicy::Minus ? Sign::Minus : Sign::Plus;
  try {
    return attempt(first);
  } catch (const SolverError& e) {
    if (opts.sign == SignPolicy::Auto && family == Family::MovingWall) {
      try {
        return attempt(Sign::Minus);
      } catch (const SolverError&) {
      }
    }
    SweepRow row;
    row.P_star = P_star;
    row.sign = first;
    row.status = e.kind();
    row.df_star_inf = row.lambda = row.P_physical = row.f0 = row.d2f0 =
        std::numeric_limits<double>::quiet_NaN();
    row.eta_inf_used = opts.eta_inf.value_or(std::numeric_limits<double>::quiet_NaN());
    return row;
  }
}

}  // namespace

std::vector<SweepRow> sweep(Family family, std::span<const double> P_star_values,
                            const SweepOptions& opts) {
  std::vector<SweepRow> rows(P_star_values.size());
  if (rows.empty()) {
    return rows;
  }
  if (family == Family::FalknerSkan) {
    throw SolverError(ErrorKind::Unsupported, "family not solvable by non-ITM");
  }
  opts.cfg.validate();

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      rows[i] = sweep_one(family, P_star_values[i], opts);
    }
  };
  const unsigned n_threads =
      std::clamp<unsigned>(opts.threads, 1u, static_cast<unsigned>(rows.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  return rows;
}

CriticalResult find_critical_parameter(Family family, Sign sign, std::pair<double, double> bracket,
                                       const IntegratorConfig& cfg, double eta_inf,
                                       double P_star_tol) {
  auto [a, b] = bracket;
  if (!(a < b) || !(P_star_tol > 0.0)) {
    throw SolverError(ErrorKind::InvalidArgument, "critical search needs a < b and tol > 0");
  }
  const auto P_of = [&](double P_star) {
    return solve_noniterative(make_problem(family, P_star, sign), cfg, eta_inf).P_physical;
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double p1 = P_of(x1);
  double p2 = P_of(x2);
  int iterations = 0;
  while (b - a > P_star_tol) {
    ++iterations;
    if (p1 < p2) {
      b = x2;
      x2 = x1;
      p2 = p1;
      x1 = b - inv_phi * (b - a);
      p1 = P_of(x1);
    } else {
      a = x1;
      x1 = x2;
      p1 = p2;
      x2 = a + inv_phi * (b - a);
      p2 = P_of(x2);
    }
  }
  const double x_min = 0.5 * (a + b);
  const ScaledSolution at_min =
      solve_noniterative(make_problem(family, x_min, sign), cfg, eta_inf);

  // A minimizer hugging either end means P is monotone on the bracket.
  const double edge = 2.0 * P_star_tol;
  if (x_min - bracket.first < edge || bracket.second - x_min < edge ||
      !(at_min.P_physical < std::min(P_of(bracket.first), P_of(bracket.second)))) {
    throw SolverError(ErrorKind::NoExtremum,
                      "P(P*) has no interior minimum on [" + std::to_string(bracket.first) + ", " +
                          std::to_string(bracket.second) + "]");
  }
  return {at_min.P_physical, x_min, bracket, iterations, at_min.d2f0};
}

ScaledSolution solve_for_target_P(Family family, double P_target, Sign sign,
                                  std::pair<double, double> P_star_bracket,
                                  const IntegratorConfig& cfg, double eta_inf,
                                  const TargetOptions& opts) {
  if (family == Family::MovingWall && P_target == 0.5) {
    return moving_wall_half_solution(eta_inf);
  }
  const auto solve_at = [&](double P_star) {
    return solve_noniterative(make_problem(family, P_star, sign), cfg, eta_inf);
  };
  // P = 0 is the fixed point of both groups.
  if (P_target == 0.0) {
    return solve_at(0.0);
  }

  auto [a, b] = P_star_bracket;
  if (a > b) std::swap(a, b);

  // A P* with no solution on this branch (blow-up or negative radicand)
  // counts as lying beyond the root, on the side opposite the solvable end.
  const auto try_solve = [&](double x) -> std::optional<ScaledSolution> {
    try {
      return solve_at(x);
    } catch (const SolverError& e) {
      if (e.kind() == ErrorKind::NonFinite || e.kind() == ErrorKind::NonPositiveRadicand) {
        return std::nullopt;
      }
      throw;
    }
  };
  std::optional<ScaledSolution> sa = try_solve(a);
  std::optional<ScaledSolution> sb = try_solve(b);
  if (!sa && !sb) {
    throw SolverError(ErrorKind::NoSignChange, "no solution at either end of [" +
                                                   std::to_string(a) + ", " + std::to_string(b) +
                                                   "]");
  }
  if (sa && std::abs(sa->P_physical - P_target) < opts.P_tol) return *sa;
  if (sb && std::abs(sb->P_physical - P_target) < opts.P_tol) return *sb;
  const bool a_below = sa ? sa->P_physical < P_target : !(sb->P_physical < P_target);
  const bool b_below = sb ? sb->P_physical < P_target : !a_below;
  if (a_below == b_below) {
    throw SolverError(ErrorKind::NoSignChange,
                      "P - target does not change sign on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  }

  // Secant uses the last two solvable iterates once the bracket is narrow.
  std::optional<std::pair<double, double>> prev, last;
  if (sa) last = std::pair{a, sa->P_physical - P_target};
  if (sb) {
    prev = last;
    last = std::pair{b, sb->P_physical - P_target};
  }
  for (int it = 0; it < opts.max_iterations; ++it) {
    double x = 0.5 * (a + b);
    if (b - a < opts.bisection_width && prev && last && last->second != prev->second) {
      const double secant =
          last->first - last->second * (last->first - prev->first) / (last->second - prev->second);
      if (secant > a && secant < b) {
        x = secant;
      }
    }
    const std::optional<ScaledSolution> sx = try_solve(x);
    bool x_below = false;
    if (sx) {
      const double gx = sx->P_physical - P_target;
      if (std::abs(gx) < opts.P_tol) {
        return *sx;
      }
      x_below = gx < 0.0;
      prev = last;
      last = std::pair{x, gx};
    } else if (sa && sb) {
      throw SolverError(ErrorKind::NonFinite,
                        "no solution at P* = " + std::to_string(x) + " inside the bracket");
    } else {
      x_below = sa ? !a_below : a_below;  // joins the unsolvable end
    }
    if (x_below == a_below) {
      a = x;
    } else {
      b = x;
    }
  }
  throw SolverError(ErrorKind::MaxIterations,
                    "target P = " + std::to_string(P_target) + " not reached in " +
                        std::to_string(opts.max_iterations) + " iterations");
}

std::pair<ScaledSolution, ScaledSolution> dual_solutions(double P_target,
                                                         const IntegratorConfig& cfg,
                                                         double eta_inf, const DualOptions& opts) {
  if (!(P_target < 0.0)) {
    throw SolverError(ErrorKind::NoSignChange,
                      "dual solutions exist only for P < 0; the solution is unique for P >= 0");
  }
  const CriticalResult fold =
      find_critical_parameter(Family::MovingWall, Sign::Plus, opts.fold_bracket, cfg, eta_inf);
  if (P_target <= fold.P_c) {
    if (fold.P_c - P_target <= opts.fold_tol) {
      ScaledSolution at_fold = solve_noniterative(
          SimilarityProblem::moving_wall(fold.P_star_at_Pc, Sign::Plus), cfg, eta_inf);
      return {at_fold, at_fold};
    }
    throw SolverError(ErrorKind::NoSignChange, "target P is below the critical value P_c = " +
                                                   std::to_string(fold.P_c));
  }
  ScaledSolution lower = solve_for_target_P(Family::MovingWall, P_target, Sign::Plus,
                                            {opts.far_P_star, fold.P_star_at_Pc}, cfg, eta_inf,
                                            opts.target);
  ScaledSolution upper = solve_for_target_P(Family::MovingWall, P_target, Sign::Plus,
                                            {fold.P_star_at_Pc, 0.0}, cfg, eta_inf, opts.target);
  return {std::move(lower), std::move(upper)};
}

double ResidualReport::bc_max() const noexcept {
  double m = 0.0;
  for (double e : bc_errors) {
    m = std::isnan(e) ? std::numeric_limits<double>::infinity() : std::max(m, e);
  }
  return m;
}

bool ResidualReport::passes(double tol) const noexcept {
  return ode_max < tol && bc_max() < tol;
}

IntegratorConfig reintegration_config() {
  IntegratorConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-14;
  cfg.initial_step = 1e-4;
  return cfg;
}

ResidualReport bvp_residual(const ScaledSolution& sol, const SimilarityProblem& p,
                            const IntegratorConfig& reintegration) {
  require_solvable(p);
  const auto& s = sol.trajectory.samples;
  if (s.size() < 2) {
    throw SolverError(ErrorKind::InvalidArgument, "residual needs at least two samples");
  }

  ResidualReport report;
  const std::size_t n = s.size();
  const std::size_t width = std::min<std::size_t>(5, n);
  std::array<double, 5> nodes{};
  std::array<double, 5> weights{};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    // Five-point window centred on i, shifted inward at the ends.
    const std::size_t lo = std::min(i >= width / 2 ? i - width / 2 : 0, n - width);
    for (std::size_t k = 0; k < width; ++k) nodes[k] = s[lo + k].eta;
    first_derivative_weights(s[i].eta, std::span(nodes.data(), width),
                             std::span(weights.data(), width));
    double d3f = 0.0;
    for (std::size_t k = 0; k < width; ++k) d3f += weights[k] * s[lo + k].d2f;
    report.ode_max = std::max(report.ode_max, std::abs(d3f + p.c * s[i].f * s[i].d2f));
  }

  const double P = p.family == Family::ClassicBlasius ? 0.0 : sol.P_physical;
  const bool moving = p.family != Family::Gasification;
  const double df_inf = moving ? 1.0 - P : 1.0;
  const auto add = [&](std::string label, double err) {
    report.bc_labels.push_back(std::move(label));
    report.bc_errors.push_back(err);
  };

  if (moving) {
    add("f(0)", std::abs(sol.f0));
    add("f'(0) - P", std::abs(sol.df0 - P));
  } else {
    add("f(0) + P f''(0)", std::abs(sol.f0 + P * sol.d2f0));
    add("f'(0)", std::abs(sol.df0));
  }
  const IvpState& first = s.front();
  add("trajectory start vs initial values",
      std::max({std::abs(first.f - sol.f0), std::abs(first.df - sol.df0),
                std::abs(first.d2f - sol.d2f0)}));
  add("f'(eta_inf) on trajectory", std::abs(s.back().df - df_inf));

  double reintegrated = std::numeric_limits<double>::infinity();
  try {
    const Trajectory fresh = integrate_ivp(OdeField{p.c, false, 0.0},
                                           {0.0, sol.f0, sol.df0, sol.d2f0}, s.back().eta,
                                           reintegration);
    reintegrated = std::abs(fresh.df_terminal - df_inf);
  } catch (const SolverError&) {
  }
  add("f'(eta_inf) on re-integration", reintegrated);
  return report;
}

}  // namespace simnitm
