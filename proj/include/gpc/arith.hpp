#ifndef GPC_ARITH_HPP_
#define GPC_ARITH_HPP_

#include <cstdint>
#include <optional>
#include <utility>

namespace gpc::arith {

  bool is_prime(std::uint64_t n) noexcept;

  // (p, k) with q = p^k, k >= 1, or nullopt if q is not a prime power.
  std::optional<std::pair<std::uint64_t, unsigned>>
  prime_power(std::uint64_t q) noexcept;

  // Least prime strictly greater than n.
  std::uint64_t next_prime_above(std::uint64_t n);

  // Checked arithmetic on exponents of infinite-order generators; throws
  // std::overflow_error instead of wrapping.
  std::int64_t checked_add(std::int64_t a, std::int64_t b);
  std::int64_t checked_mul(std::int64_t a, std::int64_t b);
  std::int64_t checked_neg(std::int64_t a);

  // Representative of a in [0, m)
  std::int64_t mod(std::int64_t a, std::uint64_t m) noexcept;

  std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace gpc::arith

#endif  // GPC_ARITH_HPP_
