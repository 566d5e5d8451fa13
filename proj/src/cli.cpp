#include "stackbook/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "stackbook/bounds.hpp"
#include "stackbook/error.hpp"
#include "stackbook/figures.hpp"
#include "stackbook/io.hpp"
#include "stackbook/labeler.hpp"
#include "stackbook/render.hpp"
#include "stackbook/solver.hpp"
#include "stackbook/verifier.hpp"

namespace stackbook::cli {
namespace {

using io::json;

struct Outcome {
  int code = kOk;
  std::string output;
  std::string summary;
};

struct Common {
  std::string output;
  std::string log;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--output,-o", common.output, "Write primary output to this file");
  sub->add_option("--log", common.log, "Append the run manifest to this file");
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw io::ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// "A" or "A:B", inclusive.
std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw DomainError("bad range \"" + text + "\" (expected A or A:B)");
  }
}

Outcome cmd_gen(int m, int n, const std::string& format) {
  const StackedBook g(m, n);
  const Labeling labeling = label_graph(g);
  return {kOk, render::labeling(g, labeling, format), "span=" + std::to_string(labeling.span())};
}

Outcome cmd_verify(const std::string& source, const std::string& graph_path,
                   const std::string& report_format, std::istream& in) {
  json doc = parse_json(read_source(source, in));
  if (!graph_path.empty()) {
    if (!doc.is_object()) throw io::ParseError("labeling document must be a JSON object");
    doc["graph"] = parse_json(read_source(graph_path, in));
  }
  const auto parsed = io::parse_labeling(doc);
  const auto report = std::visit([&](const auto& g) { return verify(g, parsed.labels); }, parsed.graph);
  const Labeling labeling = io::require_total(parsed);

  Outcome out;
  out.code = report.valid ? kOk : kViolations;
  out.summary = (report.valid ? "valid" : "invalid") + std::string(" span=") +
                std::to_string(report.span) + " violations=" + std::to_string(report.violations.size());
  if (report_format == "json") {
    out.output = io::report_to_json(parsed.graph, report).dump(2) + "\n";
  } else {
    out.output = render::report_text(parsed.graph, labeling, report);
  }
  return out;
}

Outcome cmd_bounds(int m, int n, const std::string& format) {
  const auto r = bounds::report(m, n);
  Outcome out{kOk, "", "lower=" + std::to_string(r.lower) + " upper=" + std::to_string(r.upper)};
  out.output = format == "json" ? io::bounds_to_json(r).dump(2) + "\n" : render::bounds_text({r});
  return out;
}

Outcome cmd_table(const std::string& m_range, const std::string& n_range, const std::string& format) {
  const auto [m_lo, m_hi] = parse_range(m_range);
  const auto [n_lo, n_hi] = parse_range(n_range);
  json rows = json::array();
  std::ostringstream text;
  text << std::setw(4) << "m" << std::setw(5) << "n" << std::setw(10) << "lower" << std::setw(10)
       << "span" << std::setw(10) << "exact" << std::setw(10) << "verify" << "  relation\n";
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = std::max(n_lo, 2); n <= n_hi; ++n) {
      if (n % 2 != 0) continue;
      const StackedBook g(m, n);
      const auto b = bounds::report(m, n);
      const Labeling labeling = label_graph(g);
      const bool valid = verify(g, labeling).valid;
      std::string relation;
      if (b.exact && b.lower == labeling.span() && labeling.span() == *b.exact) {
        relation = "lower==span==exact";
      } else {
        relation = "gap=" + std::to_string(labeling.span() - b.lower);
      }
      rows.push_back({{"m", m},
                      {"n", n},
                      {"lower", b.lower},
                      {"span", labeling.span()},
                      {"exact", b.exact ? json(*b.exact) : json("open")},
                      {"valid", valid},
                      {"relation", relation}});
      text << std::setw(4) << m << std::setw(5) << n << std::setw(10) << b.lower << std::setw(10)
           << labeling.span() << std::setw(10) << (b.exact ? std::to_string(*b.exact) : "open")
           << std::setw(10) << (valid ? "valid" : "INVALID") << "  " << relation << '\n';
    }
  }
  Outcome out{kOk, "", "rows=" + std::to_string(rows.size())};
  out.output = format == "json" ? rows.dump(2) + "\n" : text.str();
  return out;
}

struct SolveArgs {
  std::vector<int> mn;
  std::string graph_path;
  int path = 0;
  double time_limit = 0;
  std::string seed = "auto";
  bool no_symmetry = false;
  int threads = 1;
};

Outcome cmd_solve(const SolveArgs& a, std::istream& in) {
  const int sources = (a.mn.empty() ? 0 : 1) + (a.graph_path.empty() ? 0 : 1) + (a.path > 0 ? 1 : 0);
  if (sources != 1) throw DomainError("solve needs exactly one of: M N, --graph FILE, --path N");
  if (!a.mn.empty() && a.mn.size() != 2) throw DomainError("solve takes two positional values M N");

  SearchConfig config;
  config.symmetry_breaking = !a.no_symmetry;
  config.threads = a.threads;
  if (a.time_limit > 0) {
    config.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(a.time_limit * 1000.0));
  }
  if (a.seed != "auto") {
    try {
      std::size_t used = 0;
      config.upper_bound_seed = std::stoll(a.seed, &used);
      if (used != a.seed.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw DomainError("--seed-upper expects an integer or \"auto\"");
    }
  }

  io::GraphSpec graph = a.path > 0 ? io::GraphSpec(make_path(a.path))
                    : !a.mn.empty()  ? io::GraphSpec(StackedBook(a.mn[0], a.mn[1]))
                                     : io::parse_graph(parse_json(read_source(a.graph_path, in)));
  SearchResult result;
  if (const auto* sb = std::get_if<StackedBook>(&graph)) {
    result = solve_stacked_book(*sb, config);
  } else {
    result = solve_exact(std::get<GeneralGraph>(graph), config);
  }
  Outcome out;
  out.code = result.status == SearchStatus::timeout ? kTimeout : kOk;
  out.output = io::search_result_to_json(graph, result).dump(2) + "\n";
  out.summary = std::string(to_string(result.status)) + " rn=" + std::to_string(result.radio_number) +
                " nodes=" + std::to_string(result.nodes_explored);
  return out;
}

json figure_json(const figures::FigureData& f) {
  json doc = io::labeling_to_json(f.graph, f.labeling);
  doc["figure"] = f.tag;
  return doc;
}

Outcome cmd_figures(const std::string& which, const std::string& format) {
  std::vector<figures::FigureData> selected;
  if (which == "all") {
    selected = figures::all();
  } else if (auto tag = figures::parse_tag(which)) {
    selected.push_back(figures::get(*tag));
  } else {
    throw DomainError("--which must be 1, 2-printed, 2-corrected or all");
  }
  Outcome out{kOk, "", "figures=" + which};
  if (format == "json") {
    if (selected.size() == 1) {
      out.output = figure_json(selected.front()).dump(2) + "\n";
    } else {
      json arr = json::array();
      for (const auto& f : selected) arr.push_back(figure_json(f));
      out.output = json{{"figures", arr}}.dump(2) + "\n";
    }
    return out;
  }
  for (const auto& f : selected) {
    if (selected.size() > 1) out.output += "# figure " + f.tag + "\n";
    out.output += render::labeling(f.graph, f.labeling, format);
  }
  return out;
}

Outcome cmd_export(const std::string& source, const std::string& format, std::istream& in) {
  const auto doc = io::parse_labeling(parse_json(read_source(source, in)));
  const Labeling labeling = io::require_total(doc);
  return {kOk, render::labeling(doc.graph, labeling, format), "format=" + format};
}

void write_manifest(const std::vector<std::string>& args, const std::string& subcommand,
                    const Common& common, double wall_ms, const Outcome& outcome, std::ostream& err) {
  const json manifest{{"subcommand", subcommand},
                      {"args", args},
                      {"output", common.output.empty() ? "-" : common.output},
                      {"wall_ms", wall_ms},
                      {"exit_code", outcome.code},
                      {"outcome", outcome.summary}};
  if (!common.log.empty()) {
    std::ofstream log(common.log, std::ios::app);
    if (log) {
      log << manifest.dump() << '\n';
      return;
    }
    err << "warning: cannot open log file " << common.log << '\n';
  }
  err << manifest.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Radio labelings of stacked-book graphs S_m x P_n", "stackbook"};
  app.require_subcommand(1);
  Common common;

  int m = 0;
  int n = 0;
  std::string format = "json";

  auto* gen = app.add_subcommand("gen", "Construct a radio labeling of G_{m,n}");
  gen->add_option("m", m, "Star order")->required();
  gen->add_option("n", n, "Path order (even)")->required();
  gen->add_option("--format,-f", format, "json, text, dot or tikz")
      ->check(CLI::IsMember({"json", "text", "dot", "tikz"}));
  add_common(gen, common);

  std::string verify_source = "-";
  std::string verify_graph;
  std::string report_format = "text";
  auto* ver = app.add_subcommand("verify", "Check a labeling against the radio condition");
  ver->add_option("labeling", verify_source, "Labeling JSON file (default: stdin)");
  ver->add_option("--graph", verify_graph, "Graph JSON file overriding the document's graph");
  ver->add_option("--report,--format", report_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  add_common(ver, common);

  std::string bounds_format = "text";
  auto* bnd = app.add_subcommand("bounds", "Lower/upper radio-number bounds for G_{m,n}");
  bnd->add_option("m", m)->required();
  bnd->add_option("n", n)->required();
  bnd->add_option("--format,-f", bounds_format)->check(CLI::IsMember({"json", "text"}));
  add_common(bnd, common);

  std::string m_range;
  std::string n_range;
  std::string table_format = "text";
  auto* tbl = app.add_subcommand("table", "Sweep bounds, constructed spans and verification");
  tbl->add_option("--m", m_range, "Star orders A or A:B")->required();
  tbl->add_option("--n", n_range, "Path orders A or A:B (odd values skipped)")->required();
  tbl->add_option("--format,-f", table_format)->check(CLI::IsMember({"json", "text"}));
  add_common(tbl, common);

  SolveArgs solve_args;
  auto* slv = app.add_subcommand("solve", "Exact radio number by branch and bound");
  slv->add_option("mn", solve_args.mn, "M N for a stacked book")->expected(0, 2);
  slv->add_option("--graph", solve_args.graph_path, "Graph JSON file");
  slv->add_option("--path", solve_args.path, "Solve the path P_N")->check(CLI::PositiveNumber);
  slv->add_option("--time-limit", solve_args.time_limit, "Seconds before returning the incumbent")
      ->check(CLI::NonNegativeNumber);
  slv->add_option("--seed-upper", solve_args.seed, "Integer upper bound seed or auto");
  slv->add_flag("--no-symmetry", solve_args.no_symmetry, "Disable symmetry breaking");
  slv->add_option("--threads", solve_args.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  add_common(slv, common);

  std::string which = "all";
  std::string figures_format = "json";
  auto* fig = app.add_subcommand("figures", "Emit the embedded reference labelings");
  fig->add_option("--which", which, "1, 2-printed, 2-corrected or all");
  fig->add_option("--format,-f", figures_format)->check(CLI::IsMember({"json", "text", "dot", "tikz"}));
  add_common(fig, common);

  std::string export_source = "-";
  std::string export_format = "text";
  auto* exp = app.add_subcommand("export", "Render a labeling JSON file as text, dot, tikz or json");
  exp->add_option("labeling", export_source, "Labeling JSON file (default: stdin)");
  exp->add_option("--format,-f", export_format)->check(CLI::IsMember({"json", "text", "dot", "tikz"}));
  add_common(exp, common);

  std::string subcommand = "?";
  Outcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    outcome = {code == 0 ? kOk : kUsage, "", code == 0 ? "help" : "usage error"};
    if (!app.get_subcommands().empty()) subcommand = app.get_subcommands().front()->get_name();
    if (code != 0) {
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
      write_manifest(args, subcommand, common, ms, outcome, err);
    }
    return outcome.code;
  }
  subcommand = app.get_subcommands().front()->get_name();

  try {
    if (*gen) {
      outcome = cmd_gen(m, n, format);
    } else if (*ver) {
      outcome = cmd_verify(verify_source, verify_graph, report_format, in);
    } else if (*bnd) {
      outcome = cmd_bounds(m, n, bounds_format);
    } else if (*tbl) {
      outcome = cmd_table(m_range, n_range, table_format);
    } else if (*slv) {
      outcome = cmd_solve(solve_args, in);
    } else if (*fig) {
      outcome = cmd_figures(which, figures_format);
    } else if (*exp) {
      outcome = cmd_export(export_source, export_format, in);
    }
  } catch (const std::logic_error& e) {
    // DomainError, PartialLabelingError and bad formats all derive from
    // std::invalid_argument; anything else logic-side is a bug.
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr) throw;
    err << "error: " << e.what() << '\n';
    outcome = {kUsage, "", std::string("error: ") + e.what()};
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    outcome = {kUsage, "", std::string("error: ") + e.what()};
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << '\n';
    outcome = {kUsage, "", std::string("error: ") + e.what()};
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    outcome = {kUsage, "", std::string("error: ") + e.what()};
  }

  if (!outcome.output.empty()) {
    if (common.output.empty()) {
      out << outcome.output;
    } else {
      std::ofstream file(common.output);
      if (!file) {
        err << "error: cannot write " << common.output << '\n';
        outcome.code = kUsage;
      } else {
        file << outcome.output;
      }
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  write_manifest(args, subcommand, common, ms, outcome, err);
  return outcome.code;
}

}  // namespace stackbook::cli
