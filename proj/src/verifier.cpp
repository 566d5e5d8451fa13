#include "stackbook/verifier.hpp"

#include <algorithm>
#include <string>

#include "stackbook/error.hpp"

namespace stackbook {
namespace {

std::vector<Label> require_total(std::span<const std::optional<Label>> labels,
                                 int vertex_count, auto&& vertex_name) {
  if (static_cast<int>(labels.size()) != vertex_count) {
    throw PartialLabelingError("labeling has " + std::to_string(labels.size()) +
                               " slots for a graph with " + std::to_string(vertex_count) +
                               " vertices");
  }
  std::string missing;
  int missing_count = 0;
  std::vector<Label> out;
  out.reserve(labels.size());
  for (int i = 0; i < vertex_count; ++i) {
    if (!labels[i]) {
      if (missing_count++ > 0) missing += ", ";
      missing += vertex_name(i);
      out.push_back(0);
      continue;
    }
    if (*labels[i] < 0) {
      throw DomainError("negative label " + std::to_string(*labels[i]) + " on vertex " +
                        vertex_name(i));
    }
    out.push_back(*labels[i]);
  }
  if (missing_count > 0) {
    throw PartialLabelingError(std::to_string(missing_count) + " unlabeled vertices: " + missing);
  }
  return out;
}

template <typename Distance>
VerificationReport check_pairs(int vertex_count, int diameter, std::span<const Label> f,
                               Distance&& distance) {
  VerificationReport report;
  report.diameter = diameter;
  if (vertex_count == 0) return report;
  report.f_min = *std::min_element(f.begin(), f.end());
  report.f_max = *std::max_element(f.begin(), f.end());
  report.span = report.f_max - report.f_min;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) {
      const int d = distance(u, v);
      const Label required = static_cast<Label>(diameter) + 1 - d;
      const Label actual = f[u] > f[v] ? f[u] - f[v] : f[v] - f[u];
      if (actual < required) report.violations.push_back({u, v, d, required, actual});
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const Violation& a, const Violation& b) {
                     const Label da = a.actual_gap - a.required_gap;
                     const Label db = b.actual_gap - b.required_gap;
                     if (da != db) return da < db;
                     if (a.u != b.u) return a.u < b.u;
                     return a.v < b.v;
                   });
  report.valid = report.violations.empty();
  return report;
}

std::string stacked_name(const StackedBook& g, int index) {
  const Vertex v = g.vertex_at(index);
  return "(" + std::to_string(v.branch) + "," + std::to_string(v.page) + ")";
}

}  // namespace

VerificationReport verify(const StackedBook& g, std::span<const std::optional<Label>> labels) {
  const auto f = require_total(labels, g.vertex_count(),
                               [&](int i) { return stacked_name(g, i); });
  return verify(g, Labeling(f));
}

VerificationReport verify(const StackedBook& g, const Labeling& labeling) {
  if (static_cast<int>(labeling.size()) != g.vertex_count()) {
    throw PartialLabelingError("labeling size does not match the graph");
  }
  return check_pairs(g.vertex_count(), g.diameter(), labeling.values(),
                     [&](int u, int v) { return g.distance(u, v); });
}

VerificationReport verify(const GeneralGraph& g, std::span<const std::optional<Label>> labels) {
  const auto f = require_total(labels, g.vertex_count(),
                               [](int i) { return std::to_string(i); });
  return verify(DistanceMatrix(g), Labeling(f));
}

VerificationReport verify(const GeneralGraph& g, const Labeling& labeling) {
  return verify(DistanceMatrix(g), labeling);
}

VerificationReport verify(const DistanceMatrix& d, const Labeling& labeling) {
  if (static_cast<int>(labeling.size()) != d.size()) {
    throw PartialLabelingError("labeling size does not match the graph");
  }
  return check_pairs(d.size(), d.diameter(), labeling.values(), d);
}

std::vector<Label> per_star_spread(const StackedBook& g, const Labeling& labeling) {
  std::vector<Label> out;
  out.reserve(g.n());
  for (int page = 1; page <= g.n(); ++page) {
    Label lo = labeling.at(g, {1, page});
    Label hi = lo;
    for (int b = 2; b <= g.m(); ++b) {
      const Label f = labeling.at(g, {b, page});
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    out.push_back(hi - lo);
  }
  return out;
}

}  // namespace stackbook
