#pragma once

#include <stdexcept>
#include <vector>

#include "speccut/graph.hpp"
#include "speccut/tolerances.hpp"

namespace speccut {

/// Full eigendecomposition of a symmetric matrix: eigenvalues descending,
/// one orthonormal eigenvector per value, and the worst row residual
/// max_k ||M v_k - lambda_k v_k||_inf.
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  double residual = 0.0;
};

class EigenFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic Jacobi diagonalization. Converges when the off-diagonal Frobenius
/// norm drops below 1e-12 * ||M||_F; throws EigenFailure after 100 sweeps.
Spectrum eigen_sym(const SymmetricMatrix& m);

struct SpreadReport {
  double s_a = 0.0;
  double s_l = 0.0;
  double s_q = 0.0;
  double lhs = 0.0;  ///< 2 * s_a
  double rhs = 0.0;  ///< s_l + s_q
  bool is_regular = false;
  bool equality_within_tol = false;
};

/// Spreads of A, L and Q plus the 2*s_A <= s_L + s_Q comparison.
SpreadReport spreads(const Graph& g, const Tolerances& tol = {});

/// One Weyl inequality probe for Hermitian A, B with 1-based indices:
/// upper applies when i+j >= n+1 and bounds lambda_{i+j-n}(A+B) from below,
/// lower applies when i+j <= n+1 and bounds lambda_{i+j-1}(A+B) from above.
struct WeylCheck {
  bool upper_applicable = false;
  bool lower_applicable = false;
  bool holds_upper = false;
  bool holds_lower = false;
  double slack_upper = 0.0;  ///< lambda_{i+j-n}(A+B) - (lambda_i(A)+lambda_j(B))
  double slack_lower = 0.0;  ///< (lambda_i(A)+lambda_j(B)) - lambda_{i+j-1}(A+B)
};

WeylCheck weyl_check(const SymmetricMatrix& a, const SymmetricMatrix& b, int i,
                     int j, const Tolerances& tol = {});

/// Predicted adjacency spectrum of the join of two regular unit-weight
/// graphs: the spectra of both parts with one copy of each degree removed,
/// plus the two roots of (x - r1)(x - r2) = n1 * n2. Sorted descending.
std::vector<double> join_char_poly_roots(const Graph& h1, const Graph& h2,
                                         const Tolerances& tol = {});

}  // namespace speccut
