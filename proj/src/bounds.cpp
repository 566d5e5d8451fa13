#include "stackbook/bounds.hpp"

#include <stdexcept>
#include <string>

#include "stackbook/error.hpp"

namespace stackbook::bounds {
namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("bound arithmetic overflow");
  return r;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("bound arithmetic overflow");
  return r;
}

void require_params(int m, int n) {
  if (m < 3) throw DomainError("m must be at least 3 (got " + std::to_string(m) + ")");
  if (n < 2) throw DomainError("n must be at least 2 (got " + std::to_string(n) + ")");
  if (n % 2 != 0) throw UnsupportedParameterError("n must be even (got " + std::to_string(n) + ")");
}

}  // namespace

std::int64_t block_lower_bound(int m, int n) {
  require_params(m, n);
  return add(mul(m, n), 2 - n / 2);
}

std::int64_t block_plus_lower_bound(int m, int n) {
  require_params(m, n);
  return add(mul(m, n), 3);
}

std::int64_t lower_bound(int m, int n) {
  require_params(m, n);
  const std::int64_t links = n / 2 - 1;
  return add(mul(links, block_plus_lower_bound(m, n)), block_lower_bound(m, n));
}

std::int64_t exact_radio_number(int m, int n) {
  require_params(m, n);
  if (m == 3) throw NotExactError("rn(G_{3,n}) is only bounded, not known exactly");
  return add(mul(mul(m, n), n) / 2, n - 1);
}

std::int64_t upper_bound_m3(int n) {
  require_params(3, n);
  return add(mul(3, mul(n, n)) / 2, n);
}

std::int64_t star_span_lower_bound(int m, int n) {
  if (m < 3) throw DomainError("m must be at least 3 (got " + std::to_string(m) + ")");
  if (n < 1) throw DomainError("n must be positive (got " + std::to_string(n) + ")");
  return add(mul(n, m - 1), 1);
}

std::int64_t path_radio_number(int n) {
  if (n < 3) throw DomainError("path formula needs n >= 3 (got " + std::to_string(n) + ")");
  // P_3 is the star K_{1,2} with rn = 3; the closed forms hold from n = 4.
  if (n == 3) return 3;
  const std::int64_t k = n / 2;
  if (n % 2 == 0) return add(mul(mul(2, k), k - 1), 1);
  return add(mul(mul(2, k), k), 2);
}

BoundReport report(int m, int n) {
  BoundReport r{m, n, lower_bound(m, n), 0, std::nullopt};
  if (m >= 4) {
    r.upper = exact_radio_number(m, n);
    r.exact = r.upper;
  } else {
    r.upper = upper_bound_m3(n);
  }
  return r;
}

}  // namespace stackbook::bounds
