#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace stackbook {

/// A vertex of G_{m,n} = S_m x P_n in 1-based coordinates. Branch 1 is the
/// star center, branches 2..m are leaves; pages run along the path.
struct Vertex {
  int branch = 1;
  int page = 1;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Pair of star copies at pages (i, i + n/2).
struct Block {
  int index = 1;
  int low_page = 1;
  int high_page = 1;

  friend bool operator==(const Block&, const Block&) = default;
};

/// The stacked-book graph G_{m,n}, m >= 3 and n even.
///
/// Vertices are addressed internally by a 0-based index with the bijection
///   index = (branch - 1) * n + (page - 1),
/// so ascending index order is lexicographic (branch, page) order.
class StackedBook {
 public:
  /// Throws DomainError for m < 3 or n < 2, UnsupportedParameterError for odd n.
  StackedBook(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int diameter() const noexcept { return n_ + 1; }
  int block_count() const noexcept { return n_ / 2; }
  int vertex_count() const noexcept { return m_ * n_; }

  bool contains(Vertex v) const noexcept;
  int index_of(Vertex v) const;
  Vertex vertex_at(int index) const;

  /// Shortest-path distance in closed form.
  int distance(Vertex u, Vertex v) const;
  int distance(int u, int v) const { return distance(vertex_at(u), vertex_at(v)); }

  std::vector<Vertex> page_vertices(int page) const;

  friend bool operator==(const StackedBook&, const StackedBook&) = default;

 private:
  int m_;
  int n_;
};

std::vector<Block> blocks(const StackedBook& g);

/// Simple undirected graph over vertices 0..vertex_count-1.
class GeneralGraph {
 public:
  /// Duplicate edges collapse; self-loops and out-of-range endpoints throw
  /// DomainError.
  GeneralGraph(int vertex_count, std::span<const std::pair<int, int>> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  bool has_edge(int u, int v) const;
  bool is_connected() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;  // (lo, hi), sorted
};

/// Explicit S_m x P_n with vertex indices as in StackedBook::index_of.
GeneralGraph build_product_graph(const StackedBook& g);

GeneralGraph make_path(int n);
GeneralGraph make_star(int m);

/// Unweighted single-source distances. Throws DisconnectedGraphError naming
/// the first unreachable vertex.
std::vector<int> bfs_distances(const GeneralGraph& g, int source);

/// Dense all-pairs distance table built by repeated BFS.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const GeneralGraph& g);
  explicit DistanceMatrix(const StackedBook& g);

  int size() const noexcept { return size_; }
  int operator()(int u, int v) const noexcept {
    return dist_[static_cast<std::size_t>(u) * size_ + v];
  }
  int diameter() const noexcept { return diameter_; }

 private:
  int size_ = 0;
  int diameter_ = 0;
  std::vector<int> dist_;
};

int diameter(const GeneralGraph& g);

}  // namespace stackbook
