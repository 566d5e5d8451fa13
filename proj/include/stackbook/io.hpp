#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "stackbook/bounds.hpp"
#include "stackbook/graph.hpp"
#include "stackbook/labeling.hpp"
#include "stackbook/solver.hpp"
#include "stackbook/verifier.hpp"

namespace stackbook::io {

using json = nlohmann::json;

/// Malformed or schema-violating input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GraphSpec = std::variant<StackedBook, GeneralGraph>;

int vertex_count(const GraphSpec& g);

/// {"type":"stacked_book","m":M,"n":N} or
/// {"type":"general","vertices":V,"edges":[[a,b],...]}.
GraphSpec parse_graph(const json& j);
json graph_to_json(const GraphSpec& g);

/// A labeling as read from disk; slots are indexed by vertex index and may be
/// empty so the verifier can name unlabeled vertices.
struct LabelingDocument {
  GraphSpec graph;
  std::vector<std::optional<Label>> labels;
  std::optional<std::string> figure;
};

/// Stacked-book documents carry "m", "n" and labels of the form
/// {"branch":k,"page":j,"f":v}. General documents carry a "graph" object and
/// labels {"vertex":i,"f":v}. A "graph" object may also describe a stacked
/// book. "span" is informational and not trusted.
LabelingDocument parse_labeling(const json& j);
LabelingDocument parse_labeling_text(const std::string& text);

/// Total labeling from a document; throws PartialLabelingError or DomainError.
Labeling require_total(const LabelingDocument& doc);

/// {"m":M,"n":N,"span":S,"labels":[{"branch":k,"page":j,"f":v},...]} with
/// labels sorted by f ascending (ties by vertex index).
json labeling_to_json(const StackedBook& g, const Labeling& labeling);
json labeling_to_json(const GraphSpec& g, const Labeling& labeling);

json vertex_to_json(const GraphSpec& g, int index);
json report_to_json(const GraphSpec& g, const VerificationReport& report);
json bounds_to_json(const bounds::BoundReport& report);
json search_result_to_json(const GraphSpec& g, const SearchResult& result);

}  // namespace stackbook::io
