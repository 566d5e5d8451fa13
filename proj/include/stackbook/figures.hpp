#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stackbook/graph.hpp"
#include "stackbook/labeling.hpp"

namespace stackbook::figures {

// Reference example labelings, embedded verbatim.
enum class Figure {
  one,            // G_{4,6}, span 77
  two_printed,    // G_{3,6} as printed; (3,6) carries 59
  two_corrected,  // G_{3,6} with (3,6) = 49, span 60
};

struct FigureData {
  std::string tag;
  StackedBook graph;
  Labeling labeling;
};

FigureData get(Figure which);
std::vector<FigureData> all();

/// "1", "2-printed" or "2-corrected".
std::optional<Figure> parse_tag(std::string_view tag);

}  // namespace stackbook::figures
