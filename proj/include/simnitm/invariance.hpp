#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "simnitm/family.hpp"

namespace simnitm {

using Rational = boost::rational<std::int64_t>;

/// Linear form a1*alpha_eta + a2*alpha_f + a3*alpha_P over the group exponents.
using LinearForm = std::array<Rational, 3>;

/// A term of a transformed equation and its lambda-exponent.
struct ExponentTerm {
  std::string label;
  LinearForm exponent;
};

/// Homogeneous constraints on (alpha_eta, alpha_f, alpha_P). Each row
/// equates the lambda-exponents of two terms.
struct ExponentSystem {
  std::vector<LinearForm> rows;
  std::vector<std::string> labels;
  /// Terms of the condition at infinity; the method needs it NOT invariant.
  std::vector<ExponentTerm> asymptotic_terms;
};

struct InvarianceReport {
  int nullspace_dim = 0;
  std::vector<LinearForm> basis;
  bool applicable = false;
};

/// Term tables of the governing equation and wall conditions. Falkner-Skan
/// gives the three conditions
///   a2 - 3 a1 = 2 (a2 - a1) = a3 = a3 + 2 (a2 - a1).
ExponentSystem build_exponent_system(Family family);

/// Exact Gaussian elimination. Basis vectors are scaled so the first
/// nonzero entry is +-1, oriented so the f exponent is positive
/// (f* = lambda f); when that entry is zero, the first nonzero is +1.
InvarianceReport solve_exponent_system(const ExponentSystem& sys);

std::string format_form(const LinearForm& v);

}  // namespace simnitm
