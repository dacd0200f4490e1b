#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "speccut/tolerances.hpp"

namespace speccut {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple weighted undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are normalized to u < v and sorted
/// lexicographically; self-loops, duplicate pairs and non-positive weights
/// are rejected. When every weight is an integer, degree and eigen-equation
/// arithmetic on partition vectors stays exact in double precision.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  double total_weight() const { return total_weight_; }
  bool weights_are_integer() const { return integer_weights_; }

  double degree(int i) const;
  const std::vector<double>& degrees() const { return degrees_; }
  double max_degree() const;

  /// Adjacency list of (neighbor, weight) pairs, sorted by neighbor.
  const std::vector<std::pair<int, double>>& neighbors(int i) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> degrees_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
  double total_weight_ = 0.0;
  bool integer_weights_ = true;
};

/// Vertex bipartition (S, V\S) encoded as a +/-1 vector. Canonical form puts
/// vertex 0 in S, so p and -p describe the same object.
class Partition {
 public:
  static Partition from_members(int n, std::span<const int> members);
  static Partition from_signs(std::vector<std::int8_t> signs);
  /// Bit b of mask controls vertex b+1; vertex 0 is always in S.
  static Partition from_mask(int n, std::uint64_t mask);

  int vertex_count() const { return static_cast<int>(signs_.size()); }
  int side(int i) const { return signs_[static_cast<size_t>(i)]; }
  bool in_s(int i) const { return side(i) > 0; }
  int s_size() const;
  bool is_constant() const { return s_size() == vertex_count(); }
  std::vector<int> members() const;
  std::vector<int> complement_members() const;
  const std::vector<std::int8_t>& signs() const { return signs_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {}
  std::vector<std::int8_t> signs_;
};

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian, Degree };

std::string to_string(MatrixKind kind);

/// Dense symmetric matrix with packed lower-triangle storage.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n);

  int dim() const { return n_; }
  double operator()(int i, int j) const { return tri_[index(i, j)]; }
  void set(int i, int j, double value) { tri_[index(i, j)] = value; }

  double frobenius_norm() const;
  std::vector<double> apply(std::span<const double> x) const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  size_t index(int i, int j) const;
  int n_ = 0;
  std::vector<double> tri_;
};

SymmetricMatrix add(const SymmetricMatrix& a, const SymmetricMatrix& b);
SymmetricMatrix scaled(const SymmetricMatrix& a, double factor);

SymmetricMatrix build_matrix(const Graph& g, MatrixKind kind);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_old;  ///< new index -> original vertex
  std::vector<int> to_new;  ///< original vertex -> new index, -1 if dropped
};

/// Subgraph induced by a vertex set, with the index maps needed to pull
/// partitions back and forth.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Graph on the same n vertices keeping exactly the edges crossing the
/// partition.
Graph cut_edge_subgraph(const Graph& g, const Partition& p);

/// Graph on the same n vertices keeping exactly the edges inside S plus the
/// edges inside the complement.
Graph side_edge_subgraph(const Graph& g, const Partition& p);

/// Total weight of edges from vertex i to the opposite side of p.
double cross_degree(const Graph& g, const Partition& p, int i);

/// Disjoint union plus all cross edges with weight 1; vertices of h are
/// shifted by g.vertex_count().
Graph join(const Graph& g, const Graph& h);

Graph disjoint_union(const Graph& g, const Graph& h);

Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_empty(int n);
Graph make_matching(int t);
Graph make_path(int n);

/// Named unit-weight generator: "complete n", "cycle n",
/// "complete_bipartite a b", "empty n", "matching t", "path n".
Graph generate(const std::string& name, std::span<const int> params);

/// Parses a whitespace-separated generator spec such as "cycle 5".
Graph generate_from_spec(const std::string& spec);

/// Common weighted degree if the graph is regular, otherwise nullopt.
/// Exact comparison for integer weights, tolerance-based otherwise.
std::optional<double> regularity(const Graph& g, const Tolerances& tol = {});

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// A proper 2-coloring as a partition when the graph is bipartite.
std::optional<Partition> bipartition(const Graph& g);

}  // namespace speccut
