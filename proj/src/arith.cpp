#include "gpc/arith.hpp"

#include <limits>
#include <stdexcept>

namespace gpc::arith {

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    if (n % 2 == 0) {
      return n == 2;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::pair<std::uint64_t, unsigned>>
  prime_power(std::uint64_t q) noexcept {
    if (q < 2) {
      return std::nullopt;
    }
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d <= q / d; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    unsigned k = 0;
    while (q % p == 0) {
      q /= p;
      ++k;
    }
    if (q != 1) {
      return std::nullopt;
    }
    return std::make_pair(p, k);
  }

  std::uint64_t next_prime_above(std::uint64_t n) {
    if (n == std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("no 64-bit prime above " + std::to_string(n));
    }
    std::uint64_t c = n + 1;
    while (!is_prime(c)) {
      if (c == std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("no 64-bit prime above "
                                  + std::to_string(n));
      }
      ++c;
    }
    return c;
  }

  std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw std::overflow_error("exponent overflow in addition");
    }
    return r;
  }

  std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw std::overflow_error("exponent overflow in multiplication");
    }
    return r;
  }

  std::int64_t checked_neg(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("exponent overflow in negation");
    }
    return -a;
  }

  std::int64_t mod(std::int64_t a, std::uint64_t m) noexcept {
    // m fits in int64 for every order we accept as an exponent modulus
    auto const mm = static_cast<std::int64_t>(m);
    std::int64_t r = a % mm;
    return r < 0 ? r + mm : r;
  }

  std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
      if (__builtin_mul_overflow(r, base, &r)) {
        throw std::overflow_error("integer power overflow");
      }
    }
    return r;
  }

}  // namespace gpc::arith
