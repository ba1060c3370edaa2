#include "simnitm/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simnitm/error.hpp"

namespace simnitm {

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::ClassicBlasius: return "blasius";
    case Family::MovingWall: return "moving-wall";
    case Family::Gasification: return "gasification";
    case Family::FalknerSkan: return "falkner-skan";
  }
  return "unknown";
}

std::string_view to_string(Sign sign) noexcept { return sign == Sign::Plus ? "+1" : "-1"; }

std::optional<Family> parse_family(std::string_view text) noexcept {
  if (text == "moving-wall") return Family::MovingWall;
  if (text == "gasification") return Family::Gasification;
  if (text == "blasius") return Family::ClassicBlasius;
  if (text == "falkner-skan") return Family::FalknerSkan;
  return std::nullopt;
}

namespace {

double positive_root(double radicand, const char* what) {
  if (!(radicand > 0.0) || !std::isfinite(radicand)) {
    throw SolverError(ErrorKind::NonPositiveRadicand,
                      std::string(what) + ": radicand " + std::to_string(radicand) +
                          " is not positive, no physical solution on this branch");
  }
  return std::sqrt(radicand);
}

void require_positive_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw SolverError(ErrorKind::InvalidArgument, "group parameter must be positive");
  }
}

}  // namespace

double lambda_moving_wall(double df_star_inf, double P_star) {
  return positive_root(df_star_inf + P_star, "moving wall");
}

double lambda_gasification(double df_star_inf) {
  return positive_root(df_star_inf, "surface gasification");
}

Trajectory apply_group(const Trajectory& star, double lambda) {
  require_positive_lambda(lambda);
  const double l1 = 1.0 / lambda;
  const double l2 = l1 * l1;
  const double l3 = l2 * l1;

  Trajectory out;
  out.samples.reserve(star.samples.size());
  for (const IvpState& s : star.samples) {
    out.samples.push_back({lambda * s.eta, l1 * s.f, l2 * s.df, l3 * s.d2f});
  }
  out.eta_inf = lambda * star.eta_inf;
  out.df_terminal = out.samples.empty() ? 0.0 : out.samples.back().df;
  out.plateau_ok = star.plateau_ok;
  return out;
}

ScaledSolution rescale_moving_wall(const Trajectory& star, const IvpState& star_ics, double P_star,
                                   double lambda) {
  require_positive_lambda(lambda);
  const double l2 = 1.0 / (lambda * lambda);

  ScaledSolution sol;
  sol.family = Family::MovingWall;
  sol.lambda = lambda;
  sol.P_star = P_star;
  sol.P_physical = l2 * P_star;
  sol.df_star_inf = star.df_terminal;
  sol.star_eta_inf = star.eta_inf;
  sol.f0 = 0.0;
  sol.df0 = l2 * P_star;
  sol.d2f0 = l2 / lambda * star_ics.d2f;
  sol.trajectory = apply_group(star, lambda);
  return sol;
}

ScaledSolution rescale_gasification(const Trajectory& star, double P_star, double lambda) {
  require_positive_lambda(lambda);

  ScaledSolution sol;
  sol.family = Family::Gasification;
  sol.lambda = lambda;
  sol.P_star = P_star;
  sol.P_physical = lambda * lambda * P_star;
  sol.df_star_inf = star.df_terminal;
  sol.star_eta_inf = star.eta_inf;
  sol.f0 = -P_star / lambda;
  sol.df0 = 0.0;
  sol.d2f0 = 1.0 / (lambda * lambda * lambda);
  sol.trajectory = apply_group(star, lambda);
  return sol;
}

Trajectory resample_uniform(const Trajectory& traj, std::size_t n) {
  if (traj.samples.size() < 2 || n < 2) {
    throw SolverError(ErrorKind::InvalidArgument, "resampling needs at least two points");
  }
  const auto& s = traj.samples;
  const double a = s.front().eta;
  const double b = s.back().eta;

  Trajectory out;
  out.samples.reserve(n);
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double eta = i + 1 == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    while (j + 2 < s.size() && s[j + 1].eta < eta) {
      ++j;
    }
    const IvpState& p = s[j];
    const IvpState& q = s[j + 1];
    const double h = q.eta - p.eta;
    const double t = (eta - p.eta) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    out.samples.push_back({eta,
                           h00 * p.f + h10 * h * p.df + h01 * q.f + h11 * h * q.df,
                           h00 * p.df + h10 * h * p.d2f + h01 * q.df + h11 * h * q.d2f,
                           (1 - t) * p.d2f + t * q.d2f});
  }
  out.samples.back() = s.back();
  out.eta_inf = traj.eta_inf;
  out.df_terminal = s.back().df;
  out.plateau_ok = traj.plateau_ok;
  return out;
}

}  // namespace simnitm
