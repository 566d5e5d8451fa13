#include "stackbook/labeling.hpp"

#include <algorithm>
#include <string>

#include "stackbook/error.hpp"

namespace stackbook {

Labeling::Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 0) {
      throw DomainError("negative label " + std::to_string(labels_[i]) + " on vertex " +
                        std::to_string(i));
    }
  }
}

Label Labeling::min() const {
  return empty() ? 0 : *std::min_element(labels_.begin(), labels_.end());
}

Label Labeling::max() const {
  return empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

Labeling Labeling::shifted(Label offset) const {
  std::vector<Label> out(labels_);
  for (auto& f : out) f += offset;
  return Labeling(std::move(out));
}

}  // namespace stackbook
