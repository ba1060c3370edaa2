#pragma once

#include "simnitm/family.hpp"
#include "simnitm/ode_core.hpp"
#include "simnitm/scaling.hpp"

namespace simnitm {

/// Immutable descriptor of one problem instance. Build through the named
/// constructors so that c and the group always match the family.
struct SimilarityProblem {
  Family family = Family::MovingWall;
  double c = 0.5;
  GroupExponents group = kMovingWallGroup;
  double P_star = 0.0;
  Sign sign = Sign::Plus;

  /// f''' + f f''/2 = 0, f(0) = 0, f'(0) = P, f' -> 1 - P.
  static SimilarityProblem moving_wall(double P_star, Sign sign);
  /// f''' + f f'' = 0, f(0) = -P f''(0), f'(0) = 0, f' -> 1.
  static SimilarityProblem gasification(double P_star);
  /// P = 0 member of either family; c must be 1/2 or 1.
  static SimilarityProblem classic_blasius(double c);
  /// Constructible for invariance analysis only; every solve path rejects it.
  static SimilarityProblem falkner_skan(double P);

  [[nodiscard]] bool solvable() const noexcept { return family != Family::FalknerSkan; }
  [[nodiscard]] OdeField field() const noexcept;
};

/// Star-variable initial state at eta* = 0. Throws Unsupported for Falkner-Skan.
IvpState star_initial_conditions(const SimilarityProblem& p);

enum class SignRecommendation { Plus, Minus, Degenerate };

/// Plus below P = 1/2, Minus above. At exactly 1/2 the solution is
/// f = eta/2 and no +-1 normalization of f''(0) exists.
SignRecommendation recommended_sign(double P_physical_estimate) noexcept;

/// The explicit moving-wall solution at P = 1/2 (f' = 1/2, f'' = 0),
/// sampled at n uniform points on [0, eta_inf].
ScaledSolution moving_wall_half_solution(double eta_inf, std::size_t n = 101);

}  // namespace simnitm
