#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "stackbook/graph.hpp"
#include "stackbook/labeling.hpp"

namespace stackbook {

struct SearchConfig {
  /// Accept only labelings of span <= this value. Must be >= |V| - 1.
  std::optional<Label> upper_bound_seed;
  std::optional<std::chrono::milliseconds> time_limit;
  bool symmetry_breaking = true;
  /// Worker count; 0 picks the hardware concurrency. Results do not depend
  /// on it (node counts may).
  int threads = 1;
};

enum class SearchStatus { optimal, bounded_only, timeout };

std::string_view to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::timeout;
  /// Exact when status == optimal. Otherwise the witness span.
  Label radio_number = 0;
  /// Always a valid radio labeling, minimum label 0.
  Labeling witness;
  std::uint64_t nodes_explored = 0;
};

/// Exact radio number by branch and bound over label-ordered vertex
/// sequences. Each sequence is labeled greedily (every vertex at its least
/// feasible label), which is pointwise minimal for that order, so the search
/// is exhaustive over spans. Limited to 64 vertices.
///
/// With symmetry breaking the first vertex is restricted to the least index
/// of its automorphism orbit.
///
/// Without a seed, the starting incumbent is the identity-order greedy
/// labeling. With a seed below it, labelings of span <= seed are accepted;
/// if none exists the result is bounded_only and carries the greedy witness.
SearchResult solve_exact(const GeneralGraph& g, const SearchConfig& config = {});

/// As solve_exact on the product graph, with the chained construction as the
/// starting incumbent, the leaf-permutation and page-reflection symmetries,
/// and star/branch-row spread bounds.
SearchResult solve_stacked_book(const StackedBook& g, const SearchConfig& config = {});

/// Vertex ids that are the least member of their automorphism orbit.
std::vector<int> orbit_representatives(const DistanceMatrix& d);

}  // namespace stackbook
