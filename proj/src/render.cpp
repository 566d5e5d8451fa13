#include "stackbook/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace stackbook::render {
namespace {

std::string node_id(Vertex v) {
  return "u" + std::to_string(v.branch) + "_" + std::to_string(v.page);
}

std::string title(const StackedBook& g) {
  return "G_{" + std::to_string(g.m()) + "," + std::to_string(g.n()) + "}";
}

// Centers sit on row 0; leaves stack above it in branch order.
double row_of(Vertex v) { return v.branch == 1 ? 0.0 : static_cast<double>(v.branch - 1); }

std::string name(const io::GraphSpec& g, int index) {
  if (const auto* sb = std::get_if<StackedBook>(&g)) {
    const Vertex v = sb->vertex_at(index);
    return "(" + std::to_string(v.branch) + "," + std::to_string(v.page) + ")";
  }
  return std::to_string(index);
}

}  // namespace

std::string text(const StackedBook& g, const Labeling& labeling) {
  std::size_t width = 2;
  for (Label f : labeling.values()) width = std::max(width, std::to_string(f).size());
  std::ostringstream os;
  os << title(g) << " radio labeling (rows: branch, columns: page, * marks centers)\n";
  os << "      ";
  for (int p = 1; p <= g.n(); ++p) os << ' ' << std::setw(static_cast<int>(width) + 1) << ("p" + std::to_string(p));
  os << '\n';
  for (int b = 1; b <= g.m(); ++b) {
    os << (b == 1 ? "* " : "  ") << std::left << std::setw(4) << ("b" + std::to_string(b)) << std::right;
    for (int p = 1; p <= g.n(); ++p) {
      os << ' ' << std::setw(static_cast<int>(width) + 1) << labeling.at(g, {b, p});
    }
    os << '\n';
  }
  os << "span=" << labeling.span() << '\n';
  return os.str();
}

std::string dot(const StackedBook& g, const Labeling& labeling) {
  std::ostringstream os;
  os << "graph stacked_book {\n";
  os << "  label=\"" << title(g) << ", span " << labeling.span() << "\";\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (int b = 1; b <= g.m(); ++b) {
    for (int p = 1; p <= g.n(); ++p) {
      const Vertex v{b, p};
      os << "  " << node_id(v) << " [label=\"" << labeling.at(g, v) << "\", pos=\"" << 1.5 * p
         << ',' << row_of(v) << "!\"" << (b == 1 ? ", penwidth=2" : "") << "];\n";
    }
  }
  for (int b = 1; b <= g.m(); ++b) {
    for (int p = 1; p < g.n(); ++p) os << "  " << node_id({b, p}) << " -- " << node_id({b, p + 1}) << ";\n";
  }
  for (int p = 1; p <= g.n(); ++p) {
    for (int b = 2; b <= g.m(); ++b) os << "  " << node_id({1, p}) << " -- " << node_id({b, p}) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string tikz(const StackedBook& g, const Labeling& labeling) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n";
  for (int b = 1; b <= g.m(); ++b) {
    for (int p = 1; p <= g.n(); ++p) {
      const Vertex v{b, p};
      os << "  \\node [minimum size=0cm,draw,circle" << (b == 1 ? ",thick" : "") << "] ("
         << node_id(v) << ") at (" << 1.5 * p << ',' << row_of(v) << ") {\\tiny "
         << labeling.at(g, v) << "};\n";
    }
  }
  for (int b = 1; b <= g.m(); ++b) {
    for (int p = 1; p < g.n(); ++p) {
      os << "  \\draw (" << node_id({b, p}) << ") to (" << node_id({b, p + 1}) << ");\n";
    }
  }
  for (int p = 1; p <= g.n(); ++p) {
    for (int b = 2; b <= g.m(); ++b) {
      os << "  \\draw (" << node_id({1, p}) << ") to (" << node_id({b, p}) << ");\n";
    }
  }
  os << "  \\node at (" << 0.75 * (g.n() + 1) << ",-1) {\\small " << title(g) << ", span "
     << labeling.span() << "};\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string text(const GeneralGraph& g, const Labeling& labeling) {
  std::ostringstream os;
  os << "graph with " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  for (int v = 0; v < g.vertex_count(); ++v) os << "  " << v << ": " << labeling[v] << '\n';
  os << "span=" << labeling.span() << '\n';
  return os.str();
}

std::string dot(const GeneralGraph& g, const Labeling& labeling) {
  std::ostringstream os;
  os << "graph labeled {\n  node [shape=circle, fontsize=10];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << labeling[v] << "\"];\n";
  }
  for (auto [a, b] : g.edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string labeling(const io::GraphSpec& g, const Labeling& labeling, const std::string& format) {
  if (format == "json") return io::labeling_to_json(g, labeling).dump(2) + "\n";
  if (const auto* sb = std::get_if<StackedBook>(&g)) {
    if (format == "text") return text(*sb, labeling);
    if (format == "dot") return dot(*sb, labeling);
    if (format == "tikz") return tikz(*sb, labeling);
  } else {
    const auto& gg = std::get<GeneralGraph>(g);
    if (format == "text") return text(gg, labeling);
    if (format == "dot") return dot(gg, labeling);
  }
  throw std::invalid_argument("unsupported format \"" + format + "\" for this graph");
}

std::string report_text(const io::GraphSpec& g, const Labeling& labeling,
                        const VerificationReport& report) {
  std::ostringstream os;
  os << "valid: " << (report.valid ? "yes" : "no") << '\n';
  os << "diameter: " << report.diameter << '\n';
  os << "span: " << report.span << " (f_min " << report.f_min << ", f_max " << report.f_max << ")\n";
  os << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    os << "  " << name(g, v.u) << " f=" << labeling[v.u] << "  " << name(g, v.v)
       << " f=" << labeling[v.v] << "  d=" << v.distance << " required=" << v.required_gap
       << " actual=" << v.actual_gap << '\n';
  }
  return os.str();
}

std::string bounds_text(const std::vector<bounds::BoundReport>& rows) {
  std::ostringstream os;
  os << std::setw(4) << "m" << std::setw(5) << "n" << std::setw(12) << "lower" << std::setw(12)
     << "upper" << std::setw(12) << "exact" << '\n';
  for (const auto& r : rows) {
    os << std::setw(4) << r.m << std::setw(5) << r.n << std::setw(12) << r.lower << std::setw(12)
       << r.upper << std::setw(12) << (r.exact ? std::to_string(*r.exact) : "open") << '\n';
  }
  return os.str();
}

}  // namespace stackbook::render
