#pragma once

#include <algorithm>
#include <cmath>

namespace speccut {

/// Numerical tolerances used throughout the library. Every spectral
/// comparison gets an additive slack scaled by problem size; a claim that
/// something is *not* exact must clear ten times that slack so borderline
/// certificates are never reported as clean negatives.
struct Tolerances {
  double cmp_coeff = 1e-7;   ///< spectral comparisons, scaled by max(1, n)
  double eig_coeff = 1e-10;  ///< eigensolver residual, scaled by max(1, ||M||_F)
  double deg_coeff = 1e-9;   ///< weighted regularity, scaled by max(1, max degree)

  double cmp(int n) const { return cmp_coeff * std::max(1.0, static_cast<double>(n)); }
  double eig(double frobenius) const { return eig_coeff * std::max(1.0, frobenius); }
  double deg(double max_degree) const { return deg_coeff * std::max(1.0, max_degree); }
  double strict(int n) const { return 10.0 * cmp(n); }
};

}  // namespace speccut
