#include "stackbook/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <string>

#include "stackbook/error.hpp"

namespace stackbook {

StackedBook::StackedBook(int m, int n) : m_(m), n_(n) {
  if (m < 3) {
    throw DomainError("m must be at least 3 (got " + std::to_string(m) + ")");
  }
  if (n < 2) {
    throw DomainError("n must be at least 2 (got " + std::to_string(n) + ")");
  }
  if (n % 2 != 0) {
    throw UnsupportedParameterError("n must be even (got " + std::to_string(n) + ")");
  }
}

bool StackedBook::contains(Vertex v) const noexcept {
  return v.branch >= 1 && v.branch <= m_ && v.page >= 1 && v.page <= n_;
}

int StackedBook::index_of(Vertex v) const {
  if (!contains(v)) {
    throw DomainError("vertex (" + std::to_string(v.branch) + "," + std::to_string(v.page) +
                      ") outside G_{" + std::to_string(m_) + "," + std::to_string(n_) + "}");
  }
  return (v.branch - 1) * n_ + (v.page - 1);
}

Vertex StackedBook::vertex_at(int index) const {
  if (index < 0 || index >= vertex_count()) {
    throw DomainError("vertex index " + std::to_string(index) + " out of range");
  }
  return Vertex{index / n_ + 1, index % n_ + 1};
}

int StackedBook::distance(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) {
    throw DomainError("distance query on a vertex outside the graph");
  }
  const int along = std::abs(u.page - v.page);
  if (u.branch == v.branch) return along;
  if (u.branch == 1 || v.branch == 1) return along + 1;
  return along + 2;
}

std::vector<Vertex> StackedBook::page_vertices(int page) const {
  if (page < 1 || page > n_) throw DomainError("page " + std::to_string(page) + " out of range");
  std::vector<Vertex> out;
  out.reserve(m_);
  for (int b = 1; b <= m_; ++b) out.push_back(Vertex{b, page});
  return out;
}

std::vector<Block> blocks(const StackedBook& g) {
  std::vector<Block> out;
  const int half = g.n() / 2;
  out.reserve(half);
  for (int i = 1; i <= half; ++i) out.push_back(Block{i, i, i + half});
  return out;
}

GeneralGraph::GeneralGraph(int vertex_count, std::span<const std::pair<int, int>> edges) {
  if (vertex_count < 1) throw DomainError("graph needs at least one vertex");
  adjacency_.resize(vertex_count);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw DomainError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") references a missing vertex");
    }
    if (a == b) throw DomainError("self-loop at vertex " + std::to_string(a));
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool GeneralGraph::has_edge(int u, int v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool GeneralGraph::is_connected() const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adjacency_.size();
}

GeneralGraph build_product_graph(const StackedBook& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(g.m()) * (g.n() - 1) +
                static_cast<std::size_t>(g.n()) * (g.m() - 1));
  for (int b = 1; b <= g.m(); ++b) {
    for (int p = 1; p < g.n(); ++p) {
      edges.emplace_back(g.index_of({b, p}), g.index_of({b, p + 1}));
    }
  }
  for (int p = 1; p <= g.n(); ++p) {
    for (int b = 2; b <= g.m(); ++b) {
      edges.emplace_back(g.index_of({1, p}), g.index_of({b, p}));
    }
  }
  return GeneralGraph(g.vertex_count(), edges);
}

GeneralGraph make_path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return GeneralGraph(n, edges);
}

GeneralGraph make_star(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < m; ++i) edges.emplace_back(0, i);
  return GeneralGraph(m, edges);
}

std::vector<int> bfs_distances(const GeneralGraph& g, int source) {
  if (source < 0 || source >= g.vertex_count()) {
    throw DomainError("BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] < 0) {
      throw DisconnectedGraphError("graph is disconnected: vertex " + std::to_string(v) +
                                       " unreachable from " + std::to_string(source),
                                   v);
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const GeneralGraph& g) : size_(g.vertex_count()) {
  dist_.reserve(static_cast<std::size_t>(size_) * size_);
  for (int s = 0; s < size_; ++s) {
    const auto row = bfs_distances(g, s);
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
  diameter_ = *std::max_element(dist_.begin(), dist_.end());
}

DistanceMatrix::DistanceMatrix(const StackedBook& g)
    : size_(g.vertex_count()), diameter_(g.diameter()) {
  dist_.resize(static_cast<std::size_t>(size_) * size_);
  for (int u = 0; u < size_; ++u) {
    for (int v = 0; v < size_; ++v) dist_[static_cast<std::size_t>(u) * size_ + v] = g.distance(u, v);
  }
}

int diameter(const GeneralGraph& g) { return DistanceMatrix(g).diameter(); }

}  // namespace stackbook
