#include "stackbook/labeler.hpp"

#include <stdexcept>
#include <string>

#include "stackbook/error.hpp"
#include "stackbook/verifier.hpp"

namespace stackbook {
namespace {

void require_even_n(int n) {
  if (n < 2) throw DomainError("n must be at least 2 (got " + std::to_string(n) + ")");
  if (n % 2 != 0) throw UnsupportedParameterError("n must be even (got " + std::to_string(n) + ")");
}

BlockScheme empty_scheme(int n) {
  BlockScheme s;
  s.p = n / 2 + 1;
  s.q = n / 2;
  return s;
}

BlockLabeling apply_scheme(const BlockScheme& scheme, int m, int n, Label base,
                           int block_index) {
  const StackedBook g(m, n);
  if (block_index < 1 || block_index > g.block_count()) {
    throw DomainError("block index " + std::to_string(block_index) + " out of range");
  }
  if (base < 0) throw DomainError("block base label must be non-negative");
  const Block block = blocks(g)[block_index - 1];

  BlockLabeling out{block, {}};
  out.visits.reserve(scheme.sequence.size());
  Label f = base;
  const SchemeStep* prev = nullptr;
  for (const auto& step : scheme.sequence) {
    if (prev != nullptr) f += (prev->branch == 1 || step.branch == 1) ? scheme.p : scheme.q;
    const int page = step.role == StarRole::low ? block.low_page : block.high_page;
    out.visits.push_back({Vertex{step.branch, page}, step.role, f});
    prev = &step;
  }
  return out;
}

}  // namespace

BlockScheme odd_block_scheme(int m, int n) {
  require_even_n(n);
  if (m % 2 == 0) {
    throw SchemeMismatchError("m = " + std::to_string(m) + " is even; use label_block_even");
  }
  if (m < 5) {
    throw SchemeMismatchError("m = " + std::to_string(m) + " needs the m = 3 scheme (label_block_m3)");
  }
  BlockScheme s = empty_scheme(n);
  s.sequence.push_back({StarRole::high, 1});
  for (int r = 2; r <= m; ++r) {
    s.sequence.push_back({r % 2 == 0 ? StarRole::low : StarRole::high, r});
  }
  // Reversal at beta_m.
  for (int r = 3; r <= m; r += 2) {
    s.sequence.push_back({StarRole::low, r});
    s.sequence.push_back({StarRole::high, r - 1});
  }
  s.sequence.push_back({StarRole::low, 1});
  return s;
}

BlockScheme even_block_scheme(int m, int n) {
  require_even_n(n);
  if (m % 2 != 0) {
    throw SchemeMismatchError("m = " + std::to_string(m) + " is odd; use label_block_odd or label_block_m3");
  }
  if (m < 4) throw DomainError("m must be at least 3 (got " + std::to_string(m) + ")");
  BlockScheme s = empty_scheme(n);
  s.sequence.push_back({StarRole::high, 1});
  for (int j = 1; j <= m - 1; ++j) {
    const int a = j + 1;
    const int b = j == 1 ? m : j;
    s.sequence.push_back({StarRole::low, a});
    s.sequence.push_back({StarRole::high, b});
  }
  s.sequence.push_back({StarRole::low, 1});
  return s;
}

BlockScheme m3_block_scheme(int n) {
  require_even_n(n);
  BlockScheme s = empty_scheme(n);
  s.sequence = {{StarRole::high, 1}, {StarRole::low, 2},  {StarRole::high, 3},
                {StarRole::low, 1},  {StarRole::high, 2}, {StarRole::low, 3}};
  return s;
}

BlockScheme block_scheme(int m, int n) {
  if (m < 3) throw DomainError("m must be at least 3 (got " + std::to_string(m) + ")");
  if (m == 3) return m3_block_scheme(n);
  return m % 2 == 0 ? even_block_scheme(m, n) : odd_block_scheme(m, n);
}

BlockLabeling label_block_odd(int m, int n, Label base, int block_index) {
  return apply_scheme(odd_block_scheme(m, n), m, n, base, block_index);
}

BlockLabeling label_block_even(int m, int n, Label base, int block_index) {
  return apply_scheme(even_block_scheme(m, n), m, n, base, block_index);
}

BlockLabeling label_block_m3(int n, Label base, int block_index) {
  return apply_scheme(m3_block_scheme(n), 3, n, base, block_index);
}

Label chain_step(int m, int n) {
  const StackedBook g(m, n);
  return m == 3 ? Label{3} * n + 3 : Label{m} * n + 3;
}

std::vector<LabeledVertex> labeling_sequence(const StackedBook& g) {
  const BlockScheme scheme = block_scheme(g.m(), g.n());
  const Label step = chain_step(g.m(), g.n());
  std::vector<LabeledVertex> out;
  out.reserve(g.vertex_count());
  for (const Block& b : blocks(g)) {
    const auto block = apply_scheme(scheme, g.m(), g.n(), (b.index - 1) * step, b.index);
    out.insert(out.end(), block.visits.begin(), block.visits.end());
  }
  return out;
}

Labeling label_graph(const StackedBook& g) {
  std::vector<Label> f(g.vertex_count(), -1);
  for (const auto& lv : labeling_sequence(g)) f[g.index_of(lv.vertex)] = lv.label;
  Labeling labeling(std::move(f));
  const auto report = verify(g, labeling);
  if (!report.valid) {
    throw std::logic_error("construction for G_{" + std::to_string(g.m()) + "," +
                           std::to_string(g.n()) + "} failed verification with " +
                           std::to_string(report.violations.size()) + " violations");
  }
  return labeling;
}

}  // namespace stackbook
