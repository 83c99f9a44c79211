#include "seidel/graph.hpp"

#include <string>

#include "seidel/errors.hpp"

namespace seidel {

Graph::Graph(std::size_t n, bool loops_allowed) : n_(n), loops_allowed_(loops_allowed), adj_(n * n, 0) {
  if (n == 0) throw InvalidArgument("a graph needs at least one vertex");
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
             bool loops_allowed)
    : Graph(n, loops_allowed) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v && !loops_allowed) {
      throw InvalidArgument("loop at vertex " + std::to_string(u) + " in a simple graph");
    }
    adj_[u * n + v] = 1;
    adj_[v * n + u] = 1;
  }
}

Graph Graph::from_adjacency(const IntSymMatrix& adj, bool loops_allowed) {
  Graph g(adj.dim(), loops_allowed);
  const std::size_t n = adj.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = adj(i, j);
      if (x != 0 && x != 1) {
        throw InvalidArgument("adjacency entry (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") = " + std::to_string(x) + " is not 0/1");
      }
      if (i == j && x != 0 && !loops_allowed) {
        throw InvalidArgument("loop at vertex " + std::to_string(i) + " in a simple graph");
      }
      g.adj_[i * n + j] = static_cast<std::uint8_t>(x);
    }
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.adj_[i * n + j] = i != j;
  return g;
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

bool Graph::has_loops() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (adj_[i * n_ + i]) return true;
  return false;
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) c += adj_[i * n_ + j];
  return c;
}

namespace {

void require_simple(const Graph& g, const char* op) {
  if (g.has_loops()) throw InvalidArgument(std::string(op) + " requires a graph without loops");
}

IntSymMatrix adjacency_of(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = g.adjacent(i, j);
  return IntSymMatrix(n, std::move(e));
}

void require_blowup(int m) {
  if (m < 2) throw InvalidArgument("blow-up parameter m must be >= 2, got " + std::to_string(m));
}

}  // namespace

Graph complement(const Graph& g) {
  require_simple(g, "complement");
  const std::size_t n = g.order();
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) e[i * n + j] = !g.adjacent(i, j);
  return Graph::from_adjacency(IntSymMatrix(n, std::move(e)), false);
}

Graph add_loops(const Graph& g) {
  require_simple(g, "add_loops");
  return Graph::from_adjacency(adjacency_of(g) + IntSymMatrix::identity(g.order()), true);
}

Graph remove_loops(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> e = adjacency_of(g).entries();
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 0;
  return Graph::from_adjacency(IntSymMatrix(n, std::move(e)), false);
}

Graph d_m(const Graph& g, int m, std::size_t max_dimension) {
  require_blowup(m);
  require_simple(g, "D_m");
  const auto k = static_cast<std::size_t>(m);
  auto adj = kronecker(IntSymMatrix::ones(k), adjacency_of(g), max_dimension);
  return Graph::from_adjacency(adj, false);
}

Graph d_m_star(const Graph& g, int m, std::size_t max_dimension) {
  require_blowup(m);
  require_simple(g, "D_m*");
  const auto k = static_cast<std::size_t>(m);
  const auto a_plus_i = adjacency_of(g) + IntSymMatrix::identity(g.order());
  auto adj = kronecker(IntSymMatrix::ones(k), a_plus_i, max_dimension);
  adj = adj - IntSymMatrix::identity(adj.dim());
  return Graph::from_adjacency(adj, false);
}

}  // namespace seidel
