#include "stackbook/bounds.hpp"

#include <gtest/gtest.h>

#include "stackbook/error.hpp"

namespace stackbook::bounds {
namespace {

TEST(BoundsTest, LowerBound) {
  EXPECT_EQ(lower_bound(4, 6), 77);
  EXPECT_EQ(lower_bound(3, 6), 59);
  EXPECT_EQ(lower_bound(4, 2), 9);
  EXPECT_THROW(lower_bound(2, 6), DomainError);
  EXPECT_THROW(lower_bound(4, 5), UnsupportedParameterError);
}

TEST(BoundsTest, ExactFormula) {
  EXPECT_EQ(exact_radio_number(4, 6), 77);
  EXPECT_EQ(exact_radio_number(5, 4), 43);
  EXPECT_EQ(exact_radio_number(4, 2), 9);
  EXPECT_THROW(exact_radio_number(3, 6), NotExactError);
}

TEST(BoundsTest, UpperBoundM3) {
  EXPECT_EQ(upper_bound_m3(6), 60);
  EXPECT_EQ(upper_bound_m3(2), 8);
  EXPECT_EQ(upper_bound_m3(4), 28);
  EXPECT_THROW(upper_bound_m3(3), UnsupportedParameterError);
}

TEST(BoundsTest, StarAndBlockBounds) {
  EXPECT_EQ(star_span_lower_bound(4, 6), 19);
  EXPECT_EQ(star_span_lower_bound(3, 2), 5);
  EXPECT_EQ(star_span_lower_bound(5, 4), 17);

  EXPECT_EQ(block_lower_bound(4, 6), 23);
  EXPECT_EQ(block_plus_lower_bound(4, 6), 27);
  EXPECT_EQ(block_lower_bound(3, 6), 17);
  EXPECT_EQ(block_plus_lower_bound(3, 6), 21);
  EXPECT_EQ(block_lower_bound(4, 2), 9);
  EXPECT_EQ(block_plus_lower_bound(4, 2), 11);
}

TEST(BoundsTest, PathRadioNumber) {
  EXPECT_EQ(path_radio_number(3), 3);
  EXPECT_EQ(path_radio_number(4), 5);
  EXPECT_EQ(path_radio_number(5), 10);
  EXPECT_EQ(path_radio_number(6), 13);
  EXPECT_EQ(path_radio_number(7), 20);
  EXPECT_EQ(path_radio_number(8), 25);
  EXPECT_EQ(path_radio_number(9), 34);
  EXPECT_THROW(path_radio_number(2), DomainError);
}

TEST(BoundsTest, LowerBoundIsChainOfBlocks) {
  for (int m = 3; m <= 12; ++m) {
    for (int n = 2; n <= 20; n += 2) {
      const std::int64_t closed = static_cast<std::int64_t>(m) * n * n / 2 + n - 1;
      EXPECT_EQ(lower_bound(m, n), closed);
      EXPECT_EQ(lower_bound(m, n),
                (n / 2 - 1) * block_plus_lower_bound(m, n) + block_lower_bound(m, n));
    }
  }
}

TEST(BoundsTest, ExactEqualsLowerForMAtLeastFour) {
  for (int m = 4; m <= 10; ++m) {
    for (int n = 2; n <= 12; n += 2) EXPECT_EQ(exact_radio_number(m, n), lower_bound(m, n));
  }
}

TEST(BoundsTest, M3GapIsOne) {
  for (int n = 2; n <= 40; n += 2) {
    EXPECT_GT(upper_bound_m3(n), lower_bound(3, n));
    EXPECT_EQ(upper_bound_m3(n) - lower_bound(3, n), 1);
  }
}

TEST(BoundsTest, ReportPopulatesExactOnlyFromFour) {
  const auto r3 = report(3, 6);
  EXPECT_EQ(r3.lower, 59);
  EXPECT_EQ(r3.upper, 60);
  EXPECT_FALSE(r3.exact.has_value());
  for (int m = 4; m <= 10; ++m) {
    const auto r = report(m, 8);
    ASSERT_TRUE(r.exact.has_value());
    EXPECT_EQ(*r.exact, r.lower);
    EXPECT_EQ(*r.exact, r.upper);
  }
}

TEST(BoundsTest, OverflowIsReported) {
  EXPECT_THROW(lower_bound(2'000'000'000, 2'000'000'000), std::overflow_error);
  EXPECT_NO_THROW(lower_bound(1'000'000, 1'000'000));
}

}  // namespace
}  // namespace stackbook::bounds
