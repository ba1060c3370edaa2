#pragma once

#include <span>

namespace simnitm {

/// Weights w with sum_k w[k] g(x[k]) ~ g'(z) on arbitrary distinct nodes
/// (2 to 5 of them), exact for polynomials of degree x.size() - 1.
void first_derivative_weights(double z, std::span<const double> x, std::span<double> w);

}  // namespace simnitm
