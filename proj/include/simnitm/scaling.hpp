#pragma once

#include <cstddef>

#include "simnitm/family.hpp"
#include "simnitm/ode_core.hpp"

namespace simnitm {

/// Exponents of the group parameter: eta* = lambda^alpha_eta eta,
/// f* = lambda^alpha_f f, P* = lambda^alpha_P P.
struct GroupExponents {
  double alpha_eta = 0.0;
  double alpha_f = 0.0;
  double alpha_P = 0.0;

  friend bool operator==(const GroupExponents&, const GroupExponents&) = default;
};

inline constexpr GroupExponents kMovingWallGroup{-1.0, 1.0, 2.0};
inline constexpr GroupExponents kGasificationGroup{-1.0, 1.0, -2.0};

/// A physical BVP solution recovered from a star IVP.
struct ScaledSolution {
  Family family = Family::MovingWall;
  double lambda = 1.0;
  double P_star = 0.0;
  double P_physical = 0.0;
  double df_star_inf = 0.0;
  double star_eta_inf = 0.0;
  double f0 = 0.0;
  double df0 = 0.0;
  double d2f0 = 0.0;  // skin-friction coefficient
  Trajectory trajectory;  // physical variables
};

/// lambda = sqrt(f*'(eta*_inf) + P*). Throws NonPositiveRadicand.
double lambda_moving_wall(double df_star_inf, double P_star);

/// lambda = sqrt(f*'(eta*_inf)). Throws NonPositiveRadicand.
double lambda_gasification(double df_star_inf);

/// Pointwise map star -> physical: (eta, f, f', f'') = (l eta*, f*/l, f*'/l^2, f*''/l^3).
/// Applying it with lambda and then 1/lambda is the identity.
Trajectory apply_group(const Trajectory& star, double lambda);

ScaledSolution rescale_moving_wall(const Trajectory& star, const IvpState& star_ics, double P_star,
                                   double lambda);

/// The wall value uses f(0) = -P*/lambda, which follows from f* = lambda f
/// and f*(0) = -P*.
ScaledSolution rescale_gasification(const Trajectory& star, double P_star, double lambda);

/// Resample onto n uniformly spaced points for plot output. f and f' use
/// cubic Hermite interpolation, f'' is linear.
Trajectory resample_uniform(const Trajectory& traj, std::size_t n);

}  // namespace simnitm
