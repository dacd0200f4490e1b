#pragma once

#include <stdexcept>

#include "speccut/graph.hpp"
#include "speccut/tolerances.hpp"

namespace speccut {

/// Total weight of edges crossing the partition.
double cut_weight(const Graph& g, const Partition& p);

/// Total weight of edges not crossing the partition; equals W - cut_weight.
double cohesion(const Graph& g, const Partition& p);

/// The four spectral upper bounds on the maximum cut.
struct SpectralBounds {
  double laplacian = 0.0;     ///< (n/4) * mu_1
  double q_lower_form = 0.0;  ///< W - (n/4) * q_n
  double a_form = 0.0;        ///< W/2 - (n/4) * lambda_n
  double spread_a = 0.0;      ///< (n/4) * s_A
  double spread_q = 0.0;      ///< (n/4) * s_Q
};

SpectralBounds spectral_bounds(const Graph& g);

struct CutResult {
  double mcut = 0.0;
  Partition witness;
  double mcoh = 0.0;
  double total_weight = 0.0;
  SpectralBounds bounds;
};

inline constexpr int kDefaultEnumerationCap = 28;

/// Exhaustive enumeration above the cap would blow up; callers must lower n
/// or raise the cap explicitly.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact maximum cut over all 2^(n-1) canonical partitions. The witness is
/// the lexicographically smallest optimal S by sorted member list, and the
/// result does not depend on thread_count.
CutResult max_cut(const Graph& g, int thread_count = 1,
                  int max_n = kDefaultEnumerationCap);

}  // namespace speccut
