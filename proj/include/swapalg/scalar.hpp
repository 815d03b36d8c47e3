#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace swapalg {

/// Exact rational scalar; GMP keeps it in lowest terms after every operation.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Arithmetic in F_p for a prime p < 2^63. Elements are plain uint64 values in [0, p).
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;  // 2^61 - 1

  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t prime() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const;
  /// Multiplicative inverse; throws ZeroDenominator for 0.
  std::uint64_t inv(std::uint64_t a) const;

  /// Image of a rational under Z_(p) -> F_p; throws ZeroDenominator if p divides the denominator.
  std::uint64_t from_rational(const Rational& q) const;
  std::uint64_t from_int(std::int64_t v) const;

 private:
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace swapalg
