#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "speccut/exactness.hpp"
#include "speccut/graph.hpp"

namespace speccut {

enum class FamilyKind {
  K2JoinTK2,      ///< K2 joined with t disjoint edges; Q-exact only
  SameOrderJoin,  ///< join of two graphs of equal order; L-exact
  RegularJoin,    ///< join of two r-regular graphs, min order >= 2r; Q-exact
  AExactJoin,     ///< join of regular graphs with n1-r2 = n2-r1 > max degree
  HJoinIndependent  ///< r-regular H joined with n+r isolated vertices; A-exact
};

std::string to_string(FamilyKind family);

/// A constructed family member together with what its construction
/// guarantees: which kinds must certify exact, which must not, and the
/// extreme eigenvalue the first positive prediction pins down.
struct FamilySpec {
  FamilyKind family = FamilyKind::K2JoinTK2;
  std::string description;
  std::vector<MatrixKind> predicted_exact;
  std::vector<MatrixKind> predicted_not_exact;
  std::optional<double> predicted_eigenvalue;
};

/// Constructors validate their hypotheses eagerly; the error message names
/// the violated clause.
std::pair<Graph, FamilySpec> make_k2_join_tk2(int t);
std::pair<Graph, FamilySpec> make_same_order_join(const Graph& h1, const Graph& h2);
std::pair<Graph, FamilySpec> make_regular_join(const Graph& h1, const Graph& h2);
std::pair<Graph, FamilySpec> make_a_exact_join(const Graph& h1, const Graph& h2);
std::pair<Graph, FamilySpec> make_h_join_independent(const Graph& h);

struct FamilyCertification {
  std::array<ExactnessCertificate, 3> certificates;  ///< A, L, Q order
};

class FamilyPredictionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certifies all three kinds and checks every prediction in the spec, both
/// positive and negative; a mismatch throws instead of passing silently.
FamilyCertification certify_family(const FamilySpec& spec, const Graph& g,
                                   int thread_count = 1,
                                   int max_n = kDefaultEnumerationCap,
                                   const Tolerances& tol = {});

}  // namespace speccut
