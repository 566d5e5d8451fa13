#include "stackbook/graph.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stackbook/error.hpp"

namespace stackbook {
namespace {

TEST(StackedBookTest, DerivedConstants) {
  const StackedBook g(4, 6);
  EXPECT_EQ(g.vertex_count(), 24);
  EXPECT_EQ(g.diameter(), 7);
  EXPECT_EQ(g.block_count(), 3);
}

TEST(StackedBookTest, RejectsUnsupportedParameters) {
  EXPECT_THROW(StackedBook(2, 4), DomainError);
  EXPECT_THROW(StackedBook(4, 0), DomainError);
  EXPECT_THROW(StackedBook(4, 5), UnsupportedParameterError);
}

TEST(StackedBookTest, IndexBijection) {
  const StackedBook g(5, 8);
  for (int i = 0; i < g.vertex_count(); ++i) EXPECT_EQ(g.index_of(g.vertex_at(i)), i);
  EXPECT_EQ(g.index_of({1, 1}), 0);
  EXPECT_EQ(g.index_of({2, 1}), 8);
  EXPECT_THROW(g.index_of({6, 1}), DomainError);
  EXPECT_THROW(g.vertex_at(40), DomainError);
}

TEST(StackedBookTest, DistanceExamples) {
  const StackedBook g(4, 6);
  EXPECT_EQ(g.distance({2, 1}, {2, 4}), 3);
  EXPECT_EQ(g.distance({1, 3}, {3, 3}), 1);
  EXPECT_EQ(g.distance({2, 1}, {3, 6}), 7);
  EXPECT_EQ(g.distance({2, 1}, {1, 4}), 4);
  EXPECT_EQ(g.distance({1, 4}, {2, 1}), 4);
  EXPECT_EQ(g.distance({3, 2}, {3, 2}), 0);
  EXPECT_THROW(g.distance({5, 1}, {1, 1}), DomainError);
}

TEST(StackedBookTest, CrossBlockDistancesTakeThreeValues) {
  const StackedBook g(5, 8);
  const int half = g.n() / 2;
  for (const Block& b : blocks(g)) {
    for (int k = 1; k <= g.m(); ++k) {
      for (int t = 1; t <= g.m(); ++t) {
        const int d = g.distance({k, b.low_page}, {t, b.high_page});
        if (k == t) {
          EXPECT_EQ(d, half);
        } else if (k == 1 || t == 1) {
          EXPECT_EQ(d, half + 1);
        } else {
          EXPECT_EQ(d, half + 2);
        }
      }
    }
  }
}

TEST(ProductGraphTest, EdgeCounts) {
  const auto g32 = build_product_graph(StackedBook(3, 2));
  EXPECT_EQ(g32.vertex_count(), 6);
  EXPECT_EQ(g32.edge_count(), 7u);

  const auto g46 = build_product_graph(StackedBook(4, 6));
  EXPECT_EQ(g46.vertex_count(), 24);
  EXPECT_EQ(g46.edge_count(), 38u);
  EXPECT_EQ(testing::brute_force_edge_count(4, 6), 38);

  const auto g36 = build_product_graph(StackedBook(3, 6));
  EXPECT_EQ(g36.vertex_count(), 18);
  EXPECT_EQ(g36.edge_count(), 27u);
  EXPECT_EQ(testing::brute_force_edge_count(3, 6), 27);
}

TEST(ProductGraphTest, EdgesMatchProductDefinition) {
  for (int m = 3; m <= 6; ++m) {
    for (int n = 2; n <= 8; n += 2) {
      const StackedBook sb(m, n);
      const auto g = build_product_graph(sb);
      EXPECT_EQ(static_cast<int>(g.edge_count()), testing::brute_force_edge_count(m, n));
      EXPECT_EQ(static_cast<int>(g.edge_count()), m * (n - 1) + n * (m - 1));
      for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < g.vertex_count(); ++v) {
          EXPECT_EQ(g.has_edge(u, v), testing::product_adjacent(sb.vertex_at(u), sb.vertex_at(v)));
        }
      }
    }
  }
}

TEST(BfsTest, PathAndStar) {
  EXPECT_EQ(bfs_distances(make_path(4), 0), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(bfs_distances(make_star(4), 0), (std::vector<int>{0, 1, 1, 1}));
}

TEST(BfsTest, DisconnectedGraphNamesUnreachableVertex) {
  const std::vector<std::pair<int, int>> edges{{0, 1}, {2, 3}};
  const GeneralGraph g(4, edges);
  EXPECT_FALSE(g.is_connected());
  try {
    bfs_distances(g, 0);
    FAIL() << "expected DisconnectedGraphError";
  } catch (const DisconnectedGraphError& e) {
    EXPECT_EQ(e.unreachable(), 2);
    EXPECT_NE(std::string(e.what()).find("vertex 2"), std::string::npos);
  }
  EXPECT_THROW(diameter(g), DisconnectedGraphError);
}

TEST(GeneralGraphTest, RejectsSelfLoopsAndBadEndpoints) {
  const std::vector<std::pair<int, int>> loop{{0, 0}};
  EXPECT_THROW(GeneralGraph(2, loop), DomainError);
  const std::vector<std::pair<int, int>> far{{0, 5}};
  EXPECT_THROW(GeneralGraph(2, far), DomainError);
  const std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}};
  EXPECT_EQ(GeneralGraph(2, dup).edge_count(), 1u);
}

TEST(DiameterTest, Examples) {
  EXPECT_EQ(diameter(build_product_graph(StackedBook(4, 6))), 7);
  EXPECT_EQ(diameter(build_product_graph(StackedBook(3, 2))), 3);
  EXPECT_EQ(diameter(make_path(5)), 4);
}

TEST(BlocksTest, Examples) {
  EXPECT_EQ(blocks(StackedBook(4, 6)), (std::vector<Block>{{1, 1, 4}, {2, 2, 5}, {3, 3, 6}}));
  EXPECT_EQ(blocks(StackedBook(3, 2)), (std::vector<Block>{{1, 1, 2}}));
  EXPECT_EQ(blocks(StackedBook(5, 8)),
            (std::vector<Block>{{1, 1, 5}, {2, 2, 6}, {3, 3, 7}, {4, 4, 8}}));
}

// Closed form, BFS and Floyd-Warshall agree on every pair of the grid; the
// closed form is a metric and the diameter is n + 1.
TEST(DistancePropertyTest, ClosedFormMatchesShortestPaths) {
  for (int m = 3; m <= 8; ++m) {
    for (int n = 2; n <= 12; n += 2) {
      const StackedBook sb(m, n);
      const auto g = build_product_graph(sb);
      const auto fw = testing::floyd_warshall(g);
      const int size = sb.vertex_count();
      for (int u = 0; u < size; ++u) {
        const auto row = bfs_distances(g, u);
        for (int v = 0; v < size; ++v) {
          ASSERT_EQ(sb.distance(u, v), row[v]) << "m=" << m << " n=" << n;
          ASSERT_EQ(row[v], fw[u][v]);
          ASSERT_EQ(sb.distance(u, v), sb.distance(v, u));
          ASSERT_EQ(sb.distance(u, v) == 0, u == v);
        }
      }
      for (int u = 0; u < size; ++u) {
        for (int v = 0; v < size; ++v) {
          for (int w = 0; w < size; ++w) {
            ASSERT_LE(sb.distance(u, w), sb.distance(u, v) + sb.distance(v, w));
          }
        }
      }
      EXPECT_EQ(diameter(g), n + 1);
    }
  }
}

TEST(DistancePropertyTest, BlockDiameterIsHalfPlusTwo) {
  for (int m = 3; m <= 8; ++m) {
    for (int n = 2; n <= 12; n += 2) {
      const StackedBook sb(m, n);
      for (const Block& b : blocks(sb)) {
        std::vector<Vertex> members;
        for (int k = 1; k <= m; ++k) {
          members.push_back({k, b.low_page});
          members.push_back({k, b.high_page});
        }
        int widest = 0;
        for (auto u : members) {
          for (auto v : members) widest = std::max(widest, sb.distance(u, v));
        }
        EXPECT_EQ(widest, n / 2 + 2);
      }
    }
  }
}

}  // namespace
}  // namespace stackbook
