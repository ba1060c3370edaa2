#include "simnitm/problems.hpp"

#include <string>

#include "simnitm/error.hpp"

namespace simnitm {

SimilarityProblem SimilarityProblem::moving_wall(double P_star, Sign sign) {
  return {Family::MovingWall, 0.5, kMovingWallGroup, P_star, sign};
}

SimilarityProblem SimilarityProblem::gasification(double P_star) {
  return {Family::Gasification, 1.0, kGasificationGroup, P_star, Sign::Plus};
}

SimilarityProblem SimilarityProblem::classic_blasius(double c) {
  if (c == 0.5) {
    return {Family::ClassicBlasius, c, kMovingWallGroup, 0.0, Sign::Plus};
  }
  if (c == 1.0) {
    return {Family::ClassicBlasius, c, kGasificationGroup, 0.0, Sign::Plus};
  }
  throw SolverError(ErrorKind::InvalidArgument,
                    "classic Blasius form needs c = 1/2 or c = 1, got " + std::to_string(c));
}

SimilarityProblem SimilarityProblem::falkner_skan(double P) {
  return {Family::FalknerSkan, 1.0, GroupExponents{}, P, Sign::Plus};
}

OdeField SimilarityProblem::field() const noexcept {
  if (family == Family::FalknerSkan) {
    return {c, true, P_star};
  }
  return {c, false, 0.0};
}

IvpState star_initial_conditions(const SimilarityProblem& p) {
  switch (p.family) {
    case Family::MovingWall: return {0.0, 0.0, p.P_star, sign_value(p.sign)};
    case Family::Gasification: return {0.0, -p.P_star, 0.0, 1.0};
    case Family::ClassicBlasius: return {0.0, 0.0, 0.0, 1.0};
    case Family::FalknerSkan: break;
  }
  throw SolverError(ErrorKind::Unsupported, "family not solvable by non-ITM");
}

SignRecommendation recommended_sign(double P_physical_estimate) noexcept {
  if (P_physical_estimate < 0.5) return SignRecommendation::Plus;
  if (P_physical_estimate > 0.5) return SignRecommendation::Minus;
  return SignRecommendation::Degenerate;
}

ScaledSolution moving_wall_half_solution(double eta_inf, std::size_t n) {
  if (!(eta_inf > 0.0) || n < 2) {
    throw SolverError(ErrorKind::InvalidArgument, "half-speed solution needs eta_inf > 0, n >= 2");
  }
  ScaledSolution sol;
  sol.family = Family::MovingWall;
  sol.lambda = 1.0;
  sol.P_star = 0.5;
  sol.P_physical = 0.5;
  sol.df_star_inf = 0.5;
  sol.star_eta_inf = eta_inf;
  sol.f0 = 0.0;
  sol.df0 = 0.5;
  sol.d2f0 = 0.0;

  Trajectory& t = sol.trajectory;
  t.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double eta =
        i + 1 == n ? eta_inf : eta_inf * static_cast<double>(i) / static_cast<double>(n - 1);
    t.samples.push_back({eta, 0.5 * eta, 0.5, 0.0});
  }
  t.eta_inf = eta_inf;
  t.df_terminal = 0.5;
  t.plateau_ok = true;
  return sol;
}

}  // namespace simnitm
