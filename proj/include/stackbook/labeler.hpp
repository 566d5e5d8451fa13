#pragma once

#include <vector>

#include "stackbook/graph.hpp"
#include "stackbook/labeling.hpp"

namespace stackbook {

/// Which star copy of a block a vertex lies on: low = page i, high = page i + n/2.
enum class StarRole { low, high };

struct SchemeStep {
  StarRole role = StarRole::high;
  int branch = 1;

  friend bool operator==(const SchemeStep&, const SchemeStep&) = default;
};

/// Visit order for one block. Consecutive steps are `p` apart when either
/// vertex is a center and `q` apart when both are leaves.
struct BlockScheme {
  int p = 0;  // n/2 + 1
  int q = 0;  // n/2
  std::vector<SchemeStep> sequence;
};

struct LabeledVertex {
  Vertex vertex;
  StarRole role = StarRole::high;
  Label label = 0;

  friend bool operator==(const LabeledVertex&, const LabeledVertex&) = default;
};

struct BlockLabeling {
  Block block;
  std::vector<LabeledVertex> visits;  // in scheme order, labels increasing

  Label first() const { return visits.front().label; }
  Label last() const { return visits.back().label; }
};

// Block schemes. Each starts at the high-star center with label `base`;
// block_index selects the pages (block_index, block_index + n/2).

/// Odd m >= 5: forward pass beta_1, alpha_2, beta_3, ..., beta_m, then the
/// reversed pass alpha_3, beta_2, alpha_5, beta_4, ..., alpha_m, beta_{m-1},
/// finishing on alpha_1. Span mn - n/2 + 2.
BlockScheme odd_block_scheme(int m, int n);
/// Even m >= 4: beta_1, alpha_{a_1}, beta_{b_1}, ..., beta_{b_{m-1}}, alpha_1
/// with a = (2, ..., m) and b = (m, 2, ..., m - 1). Span mn - n/2 + 2.
BlockScheme even_block_scheme(int m, int n);
/// m = 3: u_1, v_2, u_3, v_1, u_2, v_3 (u high, v low). Span 5n/2 + 3.
BlockScheme m3_block_scheme(int n);
BlockScheme block_scheme(int m, int n);

BlockLabeling label_block_odd(int m, int n, Label base, int block_index = 1);
BlockLabeling label_block_even(int m, int n, Label base, int block_index = 1);
BlockLabeling label_block_m3(int n, Label base, int block_index = 1);

/// Offset between the first labels of consecutive blocks: mn + 3 for m >= 4,
/// 3n + 3 for m = 3.
Label chain_step(int m, int n);

/// Every vertex of g in labeling order: block 1, block 2, ... with block i
/// based at (i - 1) * chain_step.
std::vector<LabeledVertex> labeling_sequence(const StackedBook& g);

/// Chained construction over all blocks; minimum label 0. The result is
/// checked by the verifier before returning and a failure throws
/// std::logic_error.
Labeling label_graph(const StackedBook& g);

}  // namespace stackbook
