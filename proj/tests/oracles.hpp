#pragma once

// Test-only reference computations, written independently of the library's
// algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "stackbook/graph.hpp"

namespace stackbook::testing {

/// Adjacency in S_m x P_n straight from the product definition.
bool product_adjacent(Vertex a, Vertex b);

/// Edge count by testing every vertex pair with product_adjacent.
int brute_force_edge_count(int m, int n);

/// Floyd-Warshall on an adjacency matrix.
std::vector<std::vector<int>> floyd_warshall(const GeneralGraph& g);

/// Least span S such that some assignment of labels in [0, S] satisfies the
/// radio condition, found by plain backtracking over label values.
std::int64_t radio_number_by_label_search(const GeneralGraph& g);

/// Random connected graph: a random spanning tree plus extra edges.
GeneralGraph random_connected_graph(int vertices, double extra_edge_probability, std::mt19937& rng);

}  // namespace stackbook::testing
