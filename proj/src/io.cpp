#include "stackbook/io.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "stackbook/error.hpp"

namespace stackbook::io {
namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw ParseError(std::string("field \"") + key + "\" out of range");
  }
  return static_cast<int>(x);
}

Label require_label(const json& j) {
  if (!j.contains("f")) throw ParseError("label entry missing field \"f\"");
  const json& v = j.at("f");
  if (!v.is_number_integer()) throw ParseError("label \"f\" must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::uint64_t{1} << 62) {
    throw ParseError("label \"f\" out of range");
  }
  return v.get<Label>();
}

}  // namespace

int vertex_count(const GraphSpec& g) {
  return std::visit([](const auto& x) { return x.vertex_count(); }, g);
}

GraphSpec parse_graph(const json& j) {
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  const std::string type = j.value("type", "");
  if (type == "stacked_book") return StackedBook(require_int(j, "m"), require_int(j, "n"));
  if (type == "general") {
    const int vertices = require_int(j, "vertices");
    if (!j.contains("edges") || !j.at("edges").is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw ParseError("each edge must be a pair of integers");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    GeneralGraph g(vertices, edges);
    if (!g.is_connected()) throw ParseError("graph must be connected");
    return g;
  }
  throw ParseError("graph \"type\" must be \"stacked_book\" or \"general\"");
}

json graph_to_json(const GraphSpec& g) {
  if (const auto* sb = std::get_if<StackedBook>(&g)) {
    return {{"type", "stacked_book"}, {"m", sb->m()}, {"n", sb->n()}};
  }
  const auto& gg = std::get<GeneralGraph>(g);
  json edges = json::array();
  for (auto [a, b] : gg.edges()) edges.push_back({a, b});
  return {{"type", "general"}, {"vertices", gg.vertex_count()}, {"edges", edges}};
}

LabelingDocument parse_labeling(const json& j) {
  if (!j.is_object()) throw ParseError("labeling document must be a JSON object");
  std::optional<GraphSpec> graph;
  if (j.contains("graph")) {
    graph = parse_graph(j.at("graph"));
  } else if (j.contains("m") || j.contains("n")) {
    graph = StackedBook(require_int(j, "m"), require_int(j, "n"));
  } else {
    throw ParseError("labeling document needs \"m\"/\"n\" or a \"graph\" object");
  }
  if (!j.contains("labels") || !j.at("labels").is_array()) throw ParseError("\"labels\" must be an array");

  LabelingDocument doc{*graph, std::vector<std::optional<Label>>(vertex_count(*graph)), std::nullopt};
  if (j.contains("figure") && j.at("figure").is_string()) doc.figure = j.at("figure").get<std::string>();
  const auto* sb = std::get_if<StackedBook>(&doc.graph);
  for (const auto& entry : j.at("labels")) {
    if (!entry.is_object()) throw ParseError("label entries must be objects");
    int index = 0;
    if (sb != nullptr) {
      const Vertex v{require_int(entry, "branch"), require_int(entry, "page")};
      if (!sb->contains(v)) {
        throw ParseError("label for vertex (" + std::to_string(v.branch) + "," +
                         std::to_string(v.page) + ") outside the graph");
      }
      index = sb->index_of(v);
    } else {
      index = require_int(entry, "vertex");
      if (index < 0 || index >= vertex_count(doc.graph)) {
        throw ParseError("label for vertex " + std::to_string(index) + " outside the graph");
      }
    }
    if (doc.labels[index]) {
      throw ParseError("vertex " + json(vertex_to_json(doc.graph, index)).dump() + " labeled twice");
    }
    doc.labels[index] = require_label(entry);
  }
  return doc;
}

LabelingDocument parse_labeling_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_labeling(j);
}

Labeling require_total(const LabelingDocument& doc) {
  std::vector<Label> f;
  f.reserve(doc.labels.size());
  std::string missing;
  int count = 0;
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    if (!doc.labels[i]) {
      if (count++ > 0) missing += ", ";
      missing += vertex_to_json(doc.graph, static_cast<int>(i)).dump();
      continue;
    }
    f.push_back(*doc.labels[i]);
  }
  if (count > 0) throw PartialLabelingError(std::to_string(count) + " unlabeled vertices: " + missing);
  return Labeling(std::move(f));
}

json vertex_to_json(const GraphSpec& g, int index) {
  if (const auto* sb = std::get_if<StackedBook>(&g)) {
    const Vertex v = sb->vertex_at(index);
    return {{"branch", v.branch}, {"page", v.page}};
  }
  return index;
}

json labeling_to_json(const StackedBook& g, const Labeling& labeling) {
  std::vector<int> order(labeling.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return labeling[a] < labeling[b]; });
  json labels = json::array();
  for (int i : order) {
    const Vertex v = g.vertex_at(i);
    labels.push_back({{"branch", v.branch}, {"page", v.page}, {"f", labeling[i]}});
  }
  return {{"m", g.m()}, {"n", g.n()}, {"span", labeling.span()}, {"labels", labels}};
}

json labeling_to_json(const GraphSpec& g, const Labeling& labeling) {
  if (const auto* sb = std::get_if<StackedBook>(&g)) return labeling_to_json(*sb, labeling);
  std::vector<int> order(labeling.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return labeling[a] < labeling[b]; });
  json labels = json::array();
  for (int i : order) labels.push_back({{"vertex", i}, {"f", labeling[i]}});
  return {{"graph", graph_to_json(g)}, {"span", labeling.span()}, {"labels", labels}};
}

json report_to_json(const GraphSpec& g, const VerificationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"u", vertex_to_json(g, v.u)},
                          {"v", vertex_to_json(g, v.v)},
                          {"distance", v.distance},
                          {"required_gap", v.required_gap},
                          {"actual_gap", v.actual_gap}});
  }
  return {{"valid", report.valid},
          {"span", report.span},
          {"f_min", report.f_min},
          {"f_max", report.f_max},
          {"diameter", report.diameter},
          {"violation_count", report.violations.size()},
          {"violations", violations}};
}

json bounds_to_json(const bounds::BoundReport& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"lower", r.lower},
          {"upper", r.upper},
          {"exact", r.exact ? json(*r.exact) : json(nullptr)}};
}

json search_result_to_json(const GraphSpec& g, const SearchResult& r) {
  return {{"status", std::string(to_string(r.status))},
          {"radio_number", r.radio_number},
          {"nodes_explored", r.nodes_explored},
          {"witness", labeling_to_json(g, r.witness)}};
}

}  // namespace stackbook::io
