#pragma once

#include <cstdint>
#include <optional>

namespace stackbook::bounds {

// Closed-form radio-number bounds for G_{m,n} (n even) and paths. All
// arithmetic is exact; results that would overflow int64 throw
// std::overflow_error.

struct BoundReport {
  int m = 0;
  int n = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<std::int64_t> exact;  // set iff lower == upper (m >= 4)
};

/// (n/2 - 1) chain links of mn + 3 plus one block of mn - n/2 + 2,
/// i.e. mn^2/2 + n - 1.
std::int64_t lower_bound(int m, int n);

/// mn^2/2 + n - 1 for m >= 4. Throws NotExactError for m = 3.
std::int64_t exact_radio_number(int m, int n);

/// 3n^2/2 + n, the span of the m = 3 construction.
std::int64_t upper_bound_m3(int n);

/// n(m - 1) + 1: least spread of labels over one star copy.
std::int64_t star_span_lower_bound(int m, int n);

/// mn - n/2 + 2: least span of a single block, measured from its
/// high-star center.
std::int64_t block_lower_bound(int m, int n);

/// mn + 3: least gap between consecutive block-start centers.
std::int64_t block_plus_lower_bound(int m, int n);

/// rn(P_n) for n >= 3: 2k(k-1)+1 when n = 2k, 2k^2+2 when n = 2k+1 (n >= 4),
/// and 3 for P_3.
std::int64_t path_radio_number(int n);

BoundReport report(int m, int n);

}  // namespace stackbook::bounds
