#include "simnitm/invariance.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "simnitm/error.hpp"

namespace simnitm {

namespace {

const Rational kZero{0};

// lambda-exponent of d^k f / d eta^k under eta* = l^a1 eta, f* = l^a2 f.
LinearForm derivative(int k) { return {Rational(-k), Rational(1), Rational(0)}; }

LinearForm parameter() { return {Rational(0), Rational(0), Rational(1)}; }

LinearForm constant() { return {Rational(0), Rational(0), Rational(0)}; }

LinearForm operator+(const LinearForm& x, const LinearForm& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

LinearForm operator-(const LinearForm& x, const LinearForm& y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

// Consecutive terms of one relation must scale alike.
void equate_terms(ExponentSystem& sys, const std::string& where,
                  const std::vector<ExponentTerm>& terms) {
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    sys.rows.push_back(terms[i].exponent - terms[i + 1].exponent);
    sys.labels.push_back(where + ": " + terms[i].label + " ~ " + terms[i + 1].label);
  }
}

}  // namespace

ExponentSystem build_exponent_system(Family family) {
  const ExponentTerm d3f{"f'''", derivative(3)};
  const ExponentTerm f_d2f{"f f''", derivative(0) + derivative(2)};
  ExponentSystem sys;

  switch (family) {
    case Family::MovingWall:
      equate_terms(sys, "equation", {d3f, f_d2f});
      // f(0) = 0 is homogeneous; f'(0) = P ties P to f'.
      equate_terms(sys, "f'(0) = P", {{"f'(0)", derivative(1)}, {"P", parameter()}});
      sys.asymptotic_terms = {{"f'", derivative(1)}, {"1", constant()}, {"P", parameter()}};
      break;
    case Family::Gasification:
      equate_terms(sys, "equation", {d3f, f_d2f});
      equate_terms(sys, "f(0) = -P f''(0)",
                   {{"f(0)", derivative(0)}, {"P f''(0)", parameter() + derivative(2)}});
      sys.asymptotic_terms = {{"f'", derivative(1)}, {"1", constant()}};
      break;
    case Family::FalknerSkan:
      equate_terms(sys, "equation",
                   {d3f, f_d2f, {"P", parameter()},
                    {"P f'^2", parameter() + derivative(1) + derivative(1)}});
      sys.asymptotic_terms = {{"f'", derivative(1)}, {"1", constant()}};
      break;
    case Family::ClassicBlasius:
      equate_terms(sys, "equation", {d3f, f_d2f});
      sys.asymptotic_terms = {{"f'", derivative(1)}, {"1", constant()}};
      break;
  }
  return sys;
}

InvarianceReport solve_exponent_system(const ExponentSystem& sys) {
  std::vector<LinearForm> m = sys.rows;

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < 3 && r < m.size(); ++col) {
    auto it = std::find_if(m.begin() + static_cast<std::ptrdiff_t>(r), m.end(),
                           [col](const LinearForm& row) { return row[col] != kZero; });
    if (it == m.end()) continue;
    std::iter_swap(m.begin() + static_cast<std::ptrdiff_t>(r), it);
    const Rational lead = m[r][col];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == kZero) continue;
      const Rational factor = m[i][col];
      for (int j = 0; j < 3; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  InvarianceReport report;
  for (int free = 0; free < 3; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    LinearForm v = constant();
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[pivot_col[i]] = -m[i][free];
    }
    const auto first = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != kZero; });
    Rational scale = abs(*first);
    const Rational orient = v[1] != kZero ? v[1] : *first;
    if (orient < kZero) scale = -scale;
    for (auto& x : v) x /= scale;
    report.basis.push_back(v);
  }
  report.nullspace_dim = static_cast<int>(report.basis.size());

  // Applicable when some group scales the asymptotic condition non-uniformly.
  for (const LinearForm& v : report.basis) {
    std::vector<Rational> exps;
    for (const ExponentTerm& t : sys.asymptotic_terms) {
      exps.push_back(t.exponent[0] * v[0] + t.exponent[1] * v[1] + t.exponent[2] * v[2]);
    }
    if (std::adjacent_find(exps.begin(), exps.end(), std::not_equal_to<>()) != exps.end()) {
      report.applicable = true;
    }
  }
  return report;
}

std::string format_form(const LinearForm& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].numerator();
    if (v[i].denominator() != 1) os << '/' << v[i].denominator();
  }
  os << ')';
  return os.str();
}

}  // namespace simnitm
