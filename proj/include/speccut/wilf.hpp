#pragma once

#include <vector>

#include "speccut/cut.hpp"
#include "speccut/graph.hpp"
#include "speccut/tolerances.hpp"

namespace speccut {

/// One +/-1 eigenvector of A, L or Q: the partition, the eigenvalue, and
/// where that eigenvalue sits in the descending spectrum (1-based; first
/// matching position, with the multiplicity recorded for repeated values).
struct WilfSolution {
  MatrixKind kind = MatrixKind::Adjacency;
  double eigenvalue = 0.0;
  Partition partition;
  int eigenvalue_index = -1;
  int multiplicity = 0;
};

/// Exhaustively enumerates all 2^(n-1) - 1 canonical nonconstant partitions
/// and keeps those whose partition vector is an eigenvector for a requested
/// matrix kind. The hot loop is pure degree bookkeeping; one decomposition
/// per kind afterwards locates the eigenvalue positions. Output is sorted by
/// (kind, eigenvalue, members).
std::vector<WilfSolution> wilf_solve(const Graph& g,
                                     const std::vector<MatrixKind>& kinds,
                                     int thread_count = 1,
                                     int max_n = kDefaultEnumerationCap,
                                     const Tolerances& tol = {});

/// True iff at least one +/-1 eigenvector exists for the kind.
bool wilf_decide(const Graph& g, MatrixKind kind, int thread_count = 1,
                 int max_n = kDefaultEnumerationCap, const Tolerances& tol = {});

}  // namespace speccut
