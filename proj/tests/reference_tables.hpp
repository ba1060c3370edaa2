#pragma once
// Published moving-wall and gasification tables, transcribed cell by cell.
#include <array>

namespace reference {

struct MovingWallRow {
  int sign;
  double P_star;
  double df_star_inf;
  double d2f0;
  double P;
  bool df_exp;    // printed in exponent notation
  bool d2f0_exp;
};

inline constexpr std::array<MovingWallRow, 18> kMovingWall{{
    {+1, -500.0, 1.55e04, 5.46e-07, -0.033393, true, true},
    {+1, -100.0, 2.34e03, 9.42e-06, -0.044591, true, true},
    {+1, -5.0, 36.325698, 0.005704, -0.159613, false, false},
    {+1, -1.5, 4.368544, 0.205830, -0.522913, false, false},
    {+1, -1.25, 3.529165, 0.290627, -0.548447, false, false},
    {+1, -1.0, 2.917762, 0.376537, -0.521441, false, false},
    {+1, -0.75, 2.503099, 0.430814, -0.427814, false, false},
    {+1, -0.5, 2.250439, 0.431797, -0.285643, false, false},
    {+1, 0.0, 2.085393, 0.332061, 0.0, false, false},
    {+1, 1.0, 2.440648, 0.156689, 0.290643, false, false},
    {+1, 5.0, 5.771518, 0.028287, 0.464187, false, false},
    {+1, 100.0, 1.00e02, 3.53e-04, 0.499557, true, true},
    {+1, 500.0, 5.00e02, 3.16e-05, 0.499960, true, true},
    {-1, 100.0, 99.822681, -3.54e-04, 0.500444, false, true},
    {-1, 10.0, 9.433763, -0.011673, 0.514568, false, false},
    {-1, 5.0, 4.182424, -0.035939, 0.544519, false, false},
    {-1, 2.0, 0.528464, -0.248722, 0.790994, false, false},
    {-1, 1.719, -4.73e-05, -0.443715, 1.000027, true, false},
}};

struct GasificationRow {
  double P_star;
  double df_star_inf;
  double minus_f0;
  double d2f0;
  double P;
};

inline constexpr std::array<GasificationRow, 11> kGasification{{
    {0.0, 1.655301, 0.0, 0.469553, 0.0},
    {0.1, 1.793644, 0.074668, 0.416289, 0.179364},
    {0.25, 2.025902, 0.175643, 0.346795, 0.506476},
    {0.5, 2.485809, 0.317129, 0.255152, 1.242904},
    {0.75, 3.048481, 0.429556, 0.187877, 2.286361},
    {1.0, 3.726397, 0.518031, 0.139016, 3.726397},
    {1.25, 4.528469, 0.587401, 0.103770, 5.660586},
    {1.5, 5.469166, 0.641403, 0.078184, 8.203749},
    {1.75, 6.548781, 0.683845, 0.059670, 11.460366},
    {2.0, 7.779561, 0.717055, 0.046086, 15.559122},
    {2.2, 8.863956, 0.738939, 0.037893, 19.500704},
}};

inline constexpr double kTableAbsTol = 5e-4;
inline constexpr double kTableRelTol = 5e-3;

/// Absolute tolerance for plain cells, relative for exponent-notation ones.
inline bool cell_matches(double computed, double published, bool exponent_cell) {
  const double diff = computed > published ? computed - published : published - computed;
  if (exponent_cell) {
    const double scale = published < 0 ? -published : published;
    return diff <= kTableRelTol * scale;
  }
  return diff <= kTableAbsTol;
}

}  // namespace reference
