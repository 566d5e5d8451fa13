#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stackbook/graph.hpp"
#include "stackbook/labeling.hpp"

namespace stackbook {

/// One unordered pair breaking |f(u) - f(v)| >= diam + 1 - d(u, v).
/// Vertex indices satisfy u < v.
struct Violation {
  int u = 0;
  int v = 0;
  int distance = 0;
  Label required_gap = 0;
  Label actual_gap = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  Label span = 0;
  Label f_min = 0;
  Label f_max = 0;
  int diameter = 0;
  /// Sorted by (actual - required) ascending, then by (u, v).
  std::vector<Violation> violations;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Checks every unordered vertex pair. Inputs are indexed by vertex index; an
// empty slot throws PartialLabelingError naming every unlabeled vertex and a
// negative label throws DomainError.
VerificationReport verify(const StackedBook& g, std::span<const std::optional<Label>> labels);
VerificationReport verify(const StackedBook& g, const Labeling& labeling);
VerificationReport verify(const GeneralGraph& g, std::span<const std::optional<Label>> labels);
VerificationReport verify(const GeneralGraph& g, const Labeling& labeling);
VerificationReport verify(const DistanceMatrix& d, const Labeling& labeling);

/// Max minus min label over each page's star copy, indexed page - 1.
std::vector<Label> per_star_spread(const StackedBook& g, const Labeling& labeling);

}  // namespace stackbook
