#include "stackbook/solver.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stackbook/bounds.hpp"
#include "stackbook/error.hpp"
#include "stackbook/verifier.hpp"

namespace stackbook {
namespace {

using namespace std::chrono_literals;

void expect_valid_witness(const GeneralGraph& g, const SearchResult& r) {
  const auto report = verify(g, r.witness);
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.f_min, 0);
  EXPECT_EQ(report.span, r.radio_number);
}

TEST(SolverTest, PathsMatchFormula) {
  for (int n = 3; n <= 9; ++n) {
    const auto g = make_path(n);
    const auto r = solve_exact(g);
    EXPECT_EQ(r.status, SearchStatus::optimal);
    EXPECT_EQ(r.radio_number, bounds::path_radio_number(n)) << "n=" << n;
    expect_valid_witness(g, r);
  }
}

TEST(SolverTest, PathsMatchLabelSearchOracle) {
  for (int n = 2; n <= 7; ++n) {
    const auto g = make_path(n);
    EXPECT_EQ(solve_exact(g).radio_number, testing::radio_number_by_label_search(g)) << "n=" << n;
  }
}

TEST(SolverTest, SmallStackedBooks) {
  const auto g42 = solve_stacked_book(StackedBook(4, 2));
  EXPECT_EQ(g42.status, SearchStatus::optimal);
  EXPECT_EQ(g42.radio_number, 9);

  const auto g52 = solve_stacked_book(StackedBook(5, 2));
  EXPECT_EQ(g52.status, SearchStatus::optimal);
  EXPECT_EQ(g52.radio_number, 11);

  const auto g32 = solve_stacked_book(StackedBook(3, 2));
  EXPECT_EQ(g32.status, SearchStatus::optimal);
  EXPECT_GE(g32.radio_number, bounds::lower_bound(3, 2));
  EXPECT_LE(g32.radio_number, bounds::upper_bound_m3(2));

  const auto g34 = solve_stacked_book(StackedBook(3, 4));
  EXPECT_EQ(g34.status, SearchStatus::optimal);
  EXPECT_GE(g34.radio_number, bounds::lower_bound(3, 4));
  EXPECT_LE(g34.radio_number, bounds::upper_bound_m3(4));
}

TEST(SolverTest, StackedBookAgreesWithGeneralSearch) {
  for (auto [m, n] : {std::pair{3, 2}, {4, 2}, {5, 2}, {3, 4}}) {
    const StackedBook sb(m, n);
    const auto g = build_product_graph(sb);
    const auto a = solve_stacked_book(sb);
    const auto b = solve_exact(g);
    EXPECT_EQ(a.radio_number, b.radio_number) << m << "," << n;
    expect_valid_witness(g, a);
    expect_valid_witness(g, b);
  }
  EXPECT_EQ(solve_exact(build_product_graph(StackedBook(3, 2))).radio_number,
            testing::radio_number_by_label_search(build_product_graph(StackedBook(3, 2))));
}

TEST(SolverTest, RandomGraphsMatchOracle) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int vertices = 3 + trial % 5;
    const auto g = testing::random_connected_graph(vertices, 0.3, rng);
    const auto r = solve_exact(g);
    EXPECT_EQ(r.status, SearchStatus::optimal);
    EXPECT_EQ(r.radio_number, testing::radio_number_by_label_search(g)) << "trial " << trial;
    expect_valid_witness(g, r);
  }
}

TEST(SolverTest, SymmetryBreakingDoesNotChangeValue) {
  std::mt19937 rng(99);
  SearchConfig plain;
  plain.symmetry_breaking = false;
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = testing::random_connected_graph(6 + trial % 3, 0.25, rng);
    EXPECT_EQ(solve_exact(g).radio_number, solve_exact(g, plain).radio_number);
  }
  EXPECT_EQ(solve_stacked_book(StackedBook(3, 4), plain).radio_number,
            solve_stacked_book(StackedBook(3, 4)).radio_number);
}

TEST(SolverTest, WitnessIndependentOfThreadCount) {
  SearchConfig many;
  many.threads = 3;
  for (const auto& g : {make_path(8), build_product_graph(StackedBook(3, 4))}) {
    const auto one = solve_exact(g);
    const auto three = solve_exact(g, many);
    EXPECT_EQ(one.radio_number, three.radio_number);
    EXPECT_EQ(one.witness, three.witness);
  }
  const auto one = solve_stacked_book(StackedBook(4, 2));
  const auto three = solve_stacked_book(StackedBook(4, 2), many);
  EXPECT_EQ(one.witness, three.witness);
}

TEST(SolverTest, SingleThreadRunsAreDeterministic) {
  const auto g = make_path(7);
  const auto a = solve_exact(g);
  const auto b = solve_exact(g);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(SolverTest, SeedBelowTrivialBoundIsRejected) {
  SearchConfig cfg;
  cfg.upper_bound_seed = 3;
  EXPECT_THROW(solve_exact(make_path(5), cfg), DomainError);
}

TEST(SolverTest, SeedBelowOptimumGivesBoundedOnly) {
  SearchConfig cfg;
  cfg.upper_bound_seed = 9;
  const auto g = make_path(5);
  const auto r = solve_exact(g, cfg);
  EXPECT_EQ(r.status, SearchStatus::bounded_only);
  EXPECT_GT(r.radio_number, 9);
  EXPECT_TRUE(verify(g, r.witness).valid);
}

TEST(SolverTest, SeedAtOptimumIsOptimal) {
  SearchConfig cfg;
  cfg.upper_bound_seed = 10;
  const auto r = solve_exact(make_path(5), cfg);
  EXPECT_EQ(r.status, SearchStatus::optimal);
  EXPECT_EQ(r.radio_number, 10);
}

TEST(SolverTest, TimeoutKeepsValidIncumbent) {
  SearchConfig cfg;
  cfg.time_limit = 1ms;
  const StackedBook sb(3, 6);
  const auto r = solve_stacked_book(sb, cfg);
  if (r.status == SearchStatus::timeout) {
    EXPECT_LE(r.radio_number, bounds::upper_bound_m3(6));
  }
  EXPECT_TRUE(verify(sb, r.witness).valid);
  EXPECT_EQ(r.witness.span(), r.radio_number);
}

TEST(SolverTest, RejectsLargeOrDisconnectedGraphs) {
  EXPECT_THROW(solve_exact(make_path(65)), DomainError);
  const std::vector<std::pair<int, int>> split{{0, 1}, {2, 3}};
  EXPECT_THROW(solve_exact(GeneralGraph(4, split)), DisconnectedGraphError);
}

TEST(SolverTest, TrivialGraphs) {
  EXPECT_EQ(solve_exact(make_path(1)).radio_number, 0);
  EXPECT_EQ(solve_exact(make_path(2)).radio_number, 1);
}

TEST(SolverTest, OrbitRepresentatives) {
  EXPECT_EQ(orbit_representatives(DistanceMatrix(make_path(5))), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(orbit_representatives(DistanceMatrix(make_star(4))), (std::vector<int>{0, 1}));
}

TEST(SolverTest, StatusNames) {
  EXPECT_EQ(to_string(SearchStatus::optimal), "optimal");
  EXPECT_EQ(to_string(SearchStatus::bounded_only), "bounded_only");
  EXPECT_EQ(to_string(SearchStatus::timeout), "timeout");
}

}  // namespace
}  // namespace stackbook
