#include "simnitm/finite_difference.hpp"

#include <algorithm>
#include <array>

#include "simnitm/error.hpp"

namespace simnitm {

// Fornberg's recursion carried to the first derivative.
void first_derivative_weights(double z, std::span<const double> x, std::span<double> w) {
  const std::size_t n = x.size();
  if (n < 2 || n > 5 || w.size() != n) {
    throw SolverError(ErrorKind::InvalidArgument, "stencil needs 2 to 5 nodes");
  }
  std::array<std::array<double, 2>, 5> c{};
  c[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = x[0] - z;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t mn = std::min<std::size_t>(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (std::size_t k = mn; k >= 1; --k) {
          c[i][k] = c1 * (static_cast<double>(k) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (std::size_t k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - static_cast<double>(k) * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  for (std::size_t j = 0; j < n; ++j) w[j] = c[j][1];
}

}  // namespace simnitm
