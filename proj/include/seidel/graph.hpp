#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "seidel/matrix.hpp"

namespace seidel {

/// Dense undirected graph on vertices 0..n-1. Diagonal entries of the
/// adjacency are loop flags and may only be set when loops are allowed.
/// Immutable once constructed.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n, bool loops_allowed = false);
  /// Throws InvalidArgument on self-loops when !loops_allowed, or out-of-range
  /// endpoints.
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
        bool loops_allowed = false);
  /// Entries must be 0/1; a nonzero diagonal requires loops_allowed.
  static Graph from_adjacency(const IntSymMatrix& adj, bool loops_allowed);

  static Graph complete(std::size_t n);
  static Graph empty(std::size_t n) { return Graph(n); }
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t order() const { return n_; }
  bool loops_allowed() const { return loops_allowed_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  bool has_loops() const;
  bool is_simple() const { return !has_loops(); }
  std::size_t edge_count() const;  // loops count once

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  std::size_t n_ = 0;
  bool loops_allowed_ = false;
  std::vector<std::uint8_t> adj_;
};

/// Complement of a simple graph: uv present iff absent in g, u != v.
Graph complement(const Graph& g);
/// G^r: a loop on every vertex, adjacency A + I.
Graph add_loops(const Graph& g);
/// G^ur: zeroes the diagonal; result is simple.
Graph remove_loops(const Graph& g);

/// D_m(G): adjacency J_m (x) A(G), copy-major vertex order.
Graph d_m(const Graph& g, int m, std::size_t max_dimension = kDefaultMaxDimension);
/// D_m*(G): adjacency J_m (x) (A(G) + I) - I.
Graph d_m_star(const Graph& g, int m, std::size_t max_dimension = kDefaultMaxDimension);

}  // namespace seidel
