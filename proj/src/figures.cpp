#include "stackbook/figures.hpp"

#include <array>

namespace stackbook::figures {
namespace {

// Rows are branches (row 0 = centers), columns are pages 1..n.
template <std::size_t Rows, std::size_t Cols>
Labeling from_rows(const StackedBook& g, const std::array<std::array<Label, Cols>, Rows>& rows) {
  std::vector<Label> f(g.vertex_count());
  for (int b = 1; b <= g.m(); ++b) {
    for (int p = 1; p <= g.n(); ++p) f[g.index_of({b, p})] = rows[b - 1][p - 1];
  }
  return Labeling(std::move(f));
}

constexpr std::array<std::array<Label, 6>, 4> kFigure1{{
    {23, 50, 77, 0, 27, 54},
    {4, 31, 58, 13, 40, 67},
    {10, 37, 64, 19, 46, 73},
    {16, 43, 70, 7, 34, 61},
}};

constexpr std::array<std::array<Label, 6>, 3> kFigure2Printed{{
    {11, 32, 53, 0, 21, 42},
    {4, 25, 46, 15, 36, 57},
    {18, 39, 60, 7, 28, 59},
}};

}  // namespace

FigureData get(Figure which) {
  switch (which) {
    case Figure::one: {
      const StackedBook g(4, 6);
      return {"1", g, from_rows(g, kFigure1)};
    }
    case Figure::two_printed: {
      const StackedBook g(3, 6);
      return {"2-printed", g, from_rows(g, kFigure2Printed)};
    }
    case Figure::two_corrected: {
      const StackedBook g(3, 6);
      auto rows = kFigure2Printed;
      rows[2][5] = 49;
      return {"2-corrected", g, from_rows(g, rows)};
    }
  }
  return get(Figure::one);
}

std::vector<FigureData> all() {
  return {get(Figure::one), get(Figure::two_printed), get(Figure::two_corrected)};
}

std::optional<Figure> parse_tag(std::string_view tag) {
  if (tag == "1") return Figure::one;
  if (tag == "2-printed") return Figure::two_printed;
  if (tag == "2-corrected") return Figure::two_corrected;
  return std::nullopt;
}

}  // namespace stackbook::figures
