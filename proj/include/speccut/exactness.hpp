#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "speccut/cut.hpp"
#include "speccut/graph.hpp"
#include "speccut/spectra.hpp"
#include "speccut/tolerances.hpp"

namespace speccut {

/// Outcome of the structural test deciding whether a partition vector is an
/// eigenvector of A, L or Q:
///   Q: both induced sides r-regular with a common r, eigenvalue 2r;
///   L: every vertex has the same cross degree r, eigenvalue 2r;
///   A: d_i(own side) - d_i(cross) is one constant, the eigenvalue.
struct StructuralVerdict {
  MatrixKind kind = MatrixKind::Adjacency;
  bool satisfied = false;
  double eigenvalue = 0.0;  ///< meaningful only when satisfied
  std::vector<double> side_degrees;
  std::vector<double> cross_degrees;
};

StructuralVerdict structural_check(const Graph& g, const Partition& p,
                                   MatrixKind kind, const Tolerances& tol = {});

/// Independent oracle: evaluates M p componentwise and returns the eigenvalue
/// when M p = lambda p holds (exactly for integer weights). Must agree with
/// structural_check on every input.
std::optional<double> direct_check(const Graph& g, const Partition& p,
                                   MatrixKind kind, const Tolerances& tol = {});

struct ExactnessCertificate {
  MatrixKind kind = MatrixKind::Adjacency;
  bool is_exact = false;
  double eigenvalue_used = 0.0;  ///< lambda_n, mu_1 or q_n
  double bound_value = 0.0;      ///< the matching function of mcut and W
  double residual = 0.0;         ///< |eigenvalue_used - bound_value|
  Partition witness;
  std::optional<StructuralVerdict> structural;
};

/// Decides A-/L-/Q-exactness from scratch: recomputes the maximum cut,
/// compares the extreme eigenvalue against the cut-based value, and runs the
/// structural test on the witness when equality holds.
ExactnessCertificate certify_exactness(const Graph& g, MatrixKind kind,
                                       int thread_count = 1,
                                       int max_n = kDefaultEnumerationCap,
                                       const Tolerances& tol = {});

struct ExclusivityReport {
  std::array<ExactnessCertificate, 3> certificates;  ///< A, L, Q order
  int exact_count = 0;
  std::optional<double> regular_degree;
  bool corollary_holds = false;  ///< >= 2 kinds exact implies regular and all 3
  std::string detail;
};

/// Certifies all three kinds and checks that multiple exactness kinds only
/// occur together with regularity (and then all three at once).
ExclusivityReport exclusivity_check(const Graph& g, int thread_count = 1,
                                    int max_n = kDefaultEnumerationCap,
                                    const Tolerances& tol = {});

struct SufficiencyReport {
  bool l_sufficient = false;
  bool q_sufficient = false;
  bool cut_graph_regular = false;
  double cut_graph_degree = 0.0;
  bool side_graph_regular = false;
  double side_graph_degree = 0.0;
  double mu1_side_graph = 0.0;
  double mu2_cut_graph = 0.0;
  double qn_side_graph = 0.0;
  double qn1_cut_graph = 0.0;  ///< second smallest Q eigenvalue of the cut graph
};

/// Sufficient conditions evaluated on a maximum-cut partition (re-verified):
/// cut graph r-regular with 2r >= mu_1(sides) + mu_2(cut graph) forces
/// L-exactness; sides r-regular with 2r <= q_n(sides) + q_{n-1}(cut graph)
/// forces Q-exactness.
SufficiencyReport sufficient_condition_check(const Graph& g, const Partition& p,
                                             int thread_count = 1,
                                             int max_n = kDefaultEnumerationCap,
                                             const Tolerances& tol = {});

}  // namespace speccut
