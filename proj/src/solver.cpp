#include "stackbook/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "stackbook/error.hpp"
#include "stackbook/labeler.hpp"

namespace stackbook {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::optimal:
      return "optimal";
    case SearchStatus::bounded_only:
      return "bounded_only";
    case SearchStatus::timeout:
      return "timeout";
  }
  return "unknown";
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;
constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }

// A vertex subset whose labels must spread over at least `spread`.
struct Group {
  Mask members = 0;
  int spread = 0;
};

struct Problem {
  int size = 0;
  std::vector<int> req;  // diam + 1 - d(u, v), row-major
  std::vector<Group> groups;
  std::vector<std::vector<int>> groups_of;
  std::vector<int> first_candidates;
  // Interchangeable classes (1-based) that must first appear in increasing
  // order; 0 means unconstrained. Empty disables the rule.
  std::vector<int> leaf_class;
  // Bits per vertex when packing a search state into a 64-bit key; 0 when
  // the state does not fit and the transposition table is off.
  int key_bits = 0;

  int r(int u, int v) const { return req[static_cast<std::size_t>(u) * size + v]; }

  void add_group(Mask members, int spread) {
    const int id = static_cast<int>(groups.size());
    groups.push_back({members, spread});
    for (Mask m = members; m != 0; m &= m - 1) groups_of[std::countr_zero(m)].push_back(id);
  }
};

Problem make_problem(const DistanceMatrix& d) {
  if (d.size() > kMaxVertices) {
    throw DomainError("exact search supports at most " + std::to_string(kMaxVertices) +
                      " vertices (got " + std::to_string(d.size()) + ")");
  }
  Problem p;
  p.size = d.size();
  p.req.resize(static_cast<std::size_t>(p.size) * p.size);
  for (int u = 0; u < p.size; ++u) {
    for (int v = 0; v < p.size; ++v) {
      p.req[static_cast<std::size_t>(u) * p.size + v] = u == v ? 0 : d.diameter() + 1 - d(u, v);
    }
  }
  p.groups_of.resize(p.size);
  p.first_candidates.resize(p.size);
  std::iota(p.first_candidates.begin(), p.first_candidates.end(), 0);
  return p;
}

void plan_state_keys(Problem& p) {
  int max_req = 1;
  for (int v : p.req) max_req = std::max(max_req, v);
  const int bits = std::bit_width(static_cast<unsigned>(max_req));
  const int leaf_bits = p.leaf_class.empty() ? 0 : 6;
  p.key_bits = p.size * bits + leaf_bits <= 64 ? bits : 0;
}

// Label of each vertex when placed greedily in `order`.
std::vector<Label> greedy_labels(const Problem& p, const std::vector<int>& order) {
  std::vector<Label> f(p.size, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Label at = 0;
    for (std::size_t j = 0; j < i; ++j) at = std::max(at, f[order[j]] + p.r(order[j], order[i]));
    f[order[i]] = at;
  }
  return f;
}

bool satisfies(const Problem& p, std::span<const Label> f) {
  for (int u = 0; u < p.size; ++u) {
    for (int v = u + 1; v < p.size; ++v) {
      const Label gap = f[u] > f[v] ? f[u] - f[v] : f[v] - f[u];
      if (gap < p.r(u, v)) return false;
    }
  }
  return true;
}

// Incumbents compare by (span, task index); index 0 is the starting witness
// and kSeedIndex marks a bare seed that admits ties.
constexpr std::uint32_t kSeedIndex = std::numeric_limits<std::uint32_t>::max();

constexpr std::uint64_t pack(Label value, std::uint32_t index) {
  return (static_cast<std::uint64_t>(value) << 32) | index;
}

struct Shared {
  std::atomic<std::uint64_t> key{0};
  std::mutex mu;
  std::vector<Label> witness;  // by vertex
  bool found = false;
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
};

// Lossy cache of lower bounds on the remaining climb (final label minus the
// current label) keyed by the packed search state. Entries are only ever
// overwritten, so a lookup returns either a proven bound or nothing.
class TranspositionTable {
 public:
  explicit TranspositionTable(int log2_size)
      : mask_((std::size_t{1} << log2_size) - 1), slots_(std::size_t{1} << log2_size) {}

  std::optional<int> find(std::uint64_t key) const {
    const Slot& s = slots_[index(key)];
    if (s.climb > 0 && s.key == key) return s.climb;
    return std::nullopt;
  }

  void store(std::uint64_t key, int climb) {
    if (climb <= 0) return;
    Slot& s = slots_[index(key)];
    if (s.key == key && s.climb >= climb) return;
    s = {key, climb};
  }

 private:
  struct Slot {
    std::uint64_t key = 0;
    int climb = 0;
  };
  std::size_t index(std::uint64_t key) const {
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    return static_cast<std::size_t>(key) & mask_;
  }
  std::size_t mask_;
  std::vector<Slot> slots_;
};


struct Task {
  int first = 0;
  int second = -1;
};

class Worker {
 public:
  Worker(const Problem& p, Shared& shared)
      : p_(p),
        shared_(shared),
        earliest_(static_cast<std::size_t>(p.size + 1) * p.size, 0),
        order_(p.size, -1),
        labels_(p.size, 0),
        group_first_(p.groups.size(), -1) {
    if (p.key_bits > 0) table_.emplace(std::clamp(p.size + 3, 10, 21));
  }

  ~Worker() { shared_.nodes.fetch_add(nodes_, std::memory_order_relaxed); }

  void run(const Task& task, std::uint32_t index) {
    task_ = index;
    forced_second_ = task.second;
    std::fill(group_first_.begin(), group_first_.end(), -1);
    leaf_max_ = 0;
    std::fill(earliest_.begin(), earliest_.begin() + p_.size, 0);
    const Mask all = p_.size == kMaxVertices ? ~Mask{0} : bit(p_.size) - 1;
    descend(0, all, task.first);
  }

 private:
  int* level(int depth) { return earliest_.data() + static_cast<std::size_t>(depth) * p_.size; }
  const int* level(int depth) const {
    return earliest_.data() + static_cast<std::size_t>(depth) * p_.size;
  }

  bool promising(Label bound) const {
    return pack(bound, task_) < shared_.key.load(std::memory_order_relaxed);
  }

  void dfs(int depth, Mask remaining) {
    if (depth == 1 && forced_second_ >= 0) {
      descend(1, remaining, forced_second_);
      return;
    }
    const int current = labels_[depth - 1];
    std::uint64_t key = 0;
    if (table_) {
      key = state_key(depth, remaining, current);
      if (auto climb = table_->find(key); climb && !promising(current + *climb)) return;
    }
    for (Mask m = remaining; m != 0; m &= m - 1) {
      descend(depth, remaining, std::countr_zero(m));
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
    if (table_) table_->store(key, threshold() - current);
  }

  // Completions of a state depend only on which vertices remain, their
  // earliest labels relative to the current one, and the leaf rule.
  std::uint64_t state_key(int depth, Mask remaining, int current) const {
    const int* e = level(depth);
    std::uint64_t key = 0;
    for (Mask m = remaining; m != 0; m &= m - 1) {
      const int x = std::countr_zero(m);
      key |= static_cast<std::uint64_t>(e[x] - current) << (x * p_.key_bits);
    }
    if (!p_.leaf_class.empty()) key |= static_cast<std::uint64_t>(leaf_max_) << 58;
    return key;
  }

  // Least final label this task could still accept; everything explored or
  // pruned so far is at or above it.
  int threshold() const {
    const std::uint64_t key = shared_.key.load(std::memory_order_relaxed);
    const auto value = static_cast<int>(key >> 32);
    const auto holder = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
    return holder <= task_ ? value : value + 1;
  }

  void descend(int depth, Mask remaining, int w) {
    if ((remaining & bit(w)) == 0) return;
    const int saved_leaf = leaf_max_;
    if (!p_.leaf_class.empty()) {
      const int c = p_.leaf_class[w];
      if (c > leaf_max_ + 1) return;
      leaf_max_ = std::max(leaf_max_, c);
    }
    const int* cur = level(depth);
    int* next = level(depth + 1);
    const int label = cur[w];
    const Mask rest = remaining & ~bit(w);
    for (Mask m = rest; m != 0; m &= m - 1) {
      const int x = std::countr_zero(m);
      next[x] = std::max(cur[x], label + p_.r(w, x));
    }

    int opened[4];
    int opened_count = 0;
    for (int g : p_.groups_of[w]) {
      if (group_first_[g] < 0) {
        group_first_[g] = label;
        if (opened_count < 4) opened[opened_count++] = g;
      }
    }

    if (promising(bound(next, rest, w, label))) {
      order_[depth] = w;
      labels_[depth] = label;
      if ((++nodes_ & 0xFFF) == 0) check_clock();
      if (rest == 0) {
        submit(depth + 1);
      } else if (!shared_.stop.load(std::memory_order_relaxed)) {
        dfs(depth + 1, rest);
      }
    }

    for (int i = 0; i < opened_count; ++i) group_first_[opened[i]] = -1;
    leaf_max_ = saved_leaf;
  }

  // Admissible lower bound on the final label once w sits at `label` and
  // `rest` is still unplaced.
  Label bound(const int* earliest, Mask rest, int w, int label) const {
    if (rest == 0) return label;
    int best = label;
    // Every unplaced vertex sits at or above its earliest feasible label.
    for (Mask m = rest; m != 0; m &= m - 1) best = std::max(best, earliest[std::countr_zero(m)]);
    // Each unplaced vertex is entered from a distinct predecessor.
    int climb = 0;
    for (Mask m = rest; m != 0; m &= m - 1) {
      const int x = std::countr_zero(m);
      int in = p_.r(w, x);
      for (Mask k = rest & ~bit(x); k != 0 && in > 1; k &= k - 1) {
        in = std::min(in, p_.r(std::countr_zero(k), x));
      }
      climb += in;
    }
    best = std::max(best, label + climb);
    for (std::size_t g = 0; g < p_.groups.size(); ++g) {
      const Mask open = p_.groups[g].members & rest;
      if (open == 0) continue;
      int start = group_first_[g];
      if (start < 0) {
        start = std::numeric_limits<int>::max();
        for (Mask m = open; m != 0; m &= m - 1) start = std::min(start, earliest[std::countr_zero(m)]);
      }
      best = std::max(best, start + p_.groups[g].spread);
    }
    return best;
  }

  void submit(int placed) {
    const Label value = labels_[placed - 1];
    const std::uint64_t key = pack(value, task_);
    std::lock_guard lock(shared_.mu);
    if (key >= shared_.key.load()) return;
    shared_.key.store(key);
    shared_.witness.assign(p_.size, 0);
    for (int i = 0; i < placed; ++i) shared_.witness[order_[i]] = labels_[i];
    shared_.found = true;
  }

  void check_clock() {
    if (shared_.deadline && Clock::now() >= *shared_.deadline) {
      shared_.timed_out.store(true);
      shared_.stop.store(true);
    }
  }

  const Problem& p_;
  Shared& shared_;
  std::vector<int> earliest_;
  std::vector<int> order_;
  std::vector<int> labels_;
  std::vector<int> group_first_;
  int leaf_max_ = 0;
  int forced_second_ = -1;
  std::uint32_t task_ = 1;
  std::uint64_t nodes_ = 0;
  std::optional<TranspositionTable> table_;
};

struct CoreResult {
  SearchStatus status = SearchStatus::optimal;
  std::vector<Label> labels;
  std::uint64_t nodes = 0;
};

CoreResult run_search(const Problem& p, std::vector<Label> fallback, const SearchConfig& config) {
  if (config.upper_bound_seed && *config.upper_bound_seed < p.size - 1) {
    throw DomainError("upper bound seed " + std::to_string(*config.upper_bound_seed) +
                      " is below the trivial bound |V| - 1 = " + std::to_string(p.size - 1));
  }
  if (p.size == 1) return {SearchStatus::optimal, {0}, 1};

  const Label fallback_span = *std::max_element(fallback.begin(), fallback.end());
  Shared shared;
  shared.key = pack(fallback_span, 0);
  if (config.upper_bound_seed && *config.upper_bound_seed < fallback_span) {
    shared.key = pack(*config.upper_bound_seed, kSeedIndex);
  }
  if (config.time_limit) shared.deadline = Clock::now() + *config.time_limit;

  std::vector<Task> tasks;
  for (int first : p.first_candidates) {
    for (int second = 0; second < p.size; ++second) {
      if (second != first) tasks.push_back({first, second});
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Worker worker(p, shared);
    while (!shared.stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      worker.run(tasks[i], static_cast<std::uint32_t>(i + 1));
    }
  };

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  CoreResult out;
  out.nodes = shared.nodes.load();
  const std::uint32_t holder = static_cast<std::uint32_t>(shared.key.load() & 0xFFFFFFFFu);
  out.labels = shared.found ? shared.witness : std::move(fallback);
  if (shared.timed_out.load()) {
    out.status = SearchStatus::timeout;
  } else if (shared.found || holder == 0) {
    out.status = SearchStatus::optimal;
  } else {
    out.status = SearchStatus::bounded_only;
  }
  if (!satisfies(p, out.labels)) {
    throw std::logic_error("exact search produced an invalid witness");
  }
  return out;
}

SearchResult finish(CoreResult core) {
  SearchResult r;
  r.status = core.status;
  r.nodes_explored = core.nodes;
  r.witness = Labeling(std::move(core.labels));
  r.radio_number = r.witness.span();
  return r;
}

std::vector<int> identity_order(int size) {
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// Least spread of labels on `members` when only the pairwise constraints
// among them are considered.
int subset_spread(const Problem& whole, const std::vector<int>& members) {
  Problem sub;
  sub.size = static_cast<int>(members.size());
  sub.req.resize(static_cast<std::size_t>(sub.size) * sub.size);
  for (int i = 0; i < sub.size; ++i) {
    for (int j = 0; j < sub.size; ++j) {
      sub.req[static_cast<std::size_t>(i) * sub.size + j] = whole.r(members[i], members[j]);
    }
  }
  sub.groups_of.resize(sub.size);
  sub.first_candidates = identity_order(sub.size);
  const auto core = run_search(sub, greedy_labels(sub, identity_order(sub.size)), SearchConfig{});
  return static_cast<int>(*std::max_element(core.labels.begin(), core.labels.end()));
}

}  // namespace

std::vector<int> orbit_representatives(const DistanceMatrix& d) {
  const int n = d.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  // Sorted distance rows are automorphism invariants.
  std::vector<std::vector<int>> profile(n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) profile[v].push_back(d(v, w));
    std::sort(profile[v].begin(), profile[v].end());
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  // Extends a partial distance-preserving map vertex by vertex.
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    if (image[v] >= 0) return self(self, v + 1);
    for (int w = 0; w < n; ++w) {
      if (used[w] || profile[v] != profile[w]) continue;
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (image[u] >= 0 && d(u, v) != d(image[u], w)) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  };

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (find(u) == find(v) || profile[u] != profile[v]) continue;
      std::fill(image.begin(), image.end(), -1);
      std::fill(used.begin(), used.end(), 0);
      image[u] = v;
      used[v] = 1;
      if (extend(extend, 0)) {
        for (int x = 0; x < n; ++x) unite(x, image[x]);
      }
    }
  }

  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    if (find(v) == v) reps.push_back(v);
  }
  return reps;
}

SearchResult solve_exact(const GeneralGraph& g, const SearchConfig& config) {
  const DistanceMatrix d(g);
  Problem p = make_problem(d);
  if (config.symmetry_breaking) p.first_candidates = orbit_representatives(d);
  plan_state_keys(p);
  auto fallback = greedy_labels(p, identity_order(p.size));
  return finish(run_search(p, std::move(fallback), config));
}

SearchResult solve_stacked_book(const StackedBook& g, const SearchConfig& config) {
  const DistanceMatrix d(g);
  Problem p = make_problem(d);

  // Star copies and branch rows each need their own minimum spread.
  for (int page = 1; page <= g.n(); ++page) {
    std::vector<int> members;
    for (int b = 1; b <= g.m(); ++b) members.push_back(g.index_of({b, page}));
    Mask mask = 0;
    for (int v : members) mask |= bit(v);
    p.add_group(mask, subset_spread(p, members));
  }
  for (int b = 1; b <= g.m(); ++b) {
    std::vector<int> members;
    for (int page = 1; page <= g.n(); ++page) members.push_back(g.index_of({b, page}));
    Mask mask = 0;
    for (int v : members) mask |= bit(v);
    p.add_group(mask, subset_spread(p, members));
  }

  if (config.symmetry_breaking) {
    // Leaves are interchangeable across all pages at once, and pages reflect
    // j -> n + 1 - j. Leaves must first appear in branch order and the first
    // vertex sits in the lower half of the pages.
    p.leaf_class.assign(p.size, 0);
    for (int v = 0; v < p.size; ++v) p.leaf_class[v] = g.vertex_at(v).branch - 1;
    p.first_candidates.clear();
    for (int b = 1; b <= 2; ++b) {
      for (int page = 1; page <= g.n() / 2; ++page) p.first_candidates.push_back(g.index_of({b, page}));
    }
    std::sort(p.first_candidates.begin(), p.first_candidates.end());
  }

  plan_state_keys(p);
  const Labeling seed = label_graph(g);
  std::vector<Label> fallback(seed.values().begin(), seed.values().end());
  return finish(run_search(p, std::move(fallback), config));
}

}  // namespace stackbook
