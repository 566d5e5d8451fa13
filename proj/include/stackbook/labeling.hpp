#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stackbook/graph.hpp"

namespace stackbook {

using Label = std::int64_t;

/// Total assignment of non-negative labels to vertex indices of some graph.
/// For a StackedBook the indexing follows StackedBook::index_of.
class Labeling {
 public:
  Labeling() = default;
  /// Throws DomainError on a negative label.
  explicit Labeling(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  Label operator[](int index) const { return labels_.at(index); }
  Label at(const StackedBook& g, Vertex v) const { return labels_.at(g.index_of(v)); }
  std::span<const Label> values() const noexcept { return labels_; }

  Label min() const;
  Label max() const;
  Label span() const { return empty() ? 0 : max() - min(); }

  /// Same labeling with every label increased by `offset` (result must stay
  /// non-negative).
  Labeling shifted(Label offset) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
};

}  // namespace stackbook
