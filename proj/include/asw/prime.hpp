#pragma once

#include <cstdint>
#include <string>

#include "asw/errors.hpp"

namespace asw {

/// An odd prime, the characteristic everything downstream lives in.
/// Primality is checked once at construction; p = 2 is rejected because the
/// whole construction needs 2 to be invertible mod p.
class Prime {
public:
  explicit Prime(std::int64_t p) : p_(p) {
    if (p < 3) throw InvalidPrimeError("p must be an odd prime, got " + std::to_string(p));
    if (p % 2 == 0) throw InvalidPrimeError("p must be an odd prime, got " + std::to_string(p));
    if (p > kMaxPrime) throw InvalidPrimeError("p too large: " + std::to_string(p));
    for (std::int64_t d = 3; d * d <= p; d += 2) {
      if (p % d == 0) throw InvalidPrimeError("p must be an odd prime, got " + std::to_string(p));
    }
    p_ = p;
  }

  std::int64_t value() const { return p_; }

  /// Least non-negative residue.
  std::int64_t reduce(std::int64_t c) const {
    std::int64_t r = c % p_;
    return r < 0 ? r + p_ : r;
  }

  std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(a + b); }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(a - b); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) * reduce(b)); }
  std::int64_t neg(std::int64_t a) const { return reduce(-a); }

  std::int64_t pow(std::int64_t base, std::uint64_t e) const {
    std::int64_t acc = 1;
    std::int64_t b = reduce(base);
    while (e) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  }

  std::int64_t inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw Error("division by zero mod " + std::to_string(p_));
    return pow(a, static_cast<std::uint64_t>(p_ - 2));
  }

  bool operator==(const Prime& o) const { return p_ == o.p_; }
  bool operator!=(const Prime& o) const { return p_ != o.p_; }

private:
  // keeps products of two residues inside int64
  static constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;
  std::int64_t p_;
};

/// Smallest quadratic non-residue >= 2; for p = 3 this is 2.
inline std::int64_t quadratic_nonresidue(const Prime& p) {
  for (std::int64_t a = 2; a < p.value(); ++a) {
    if (p.pow(a, static_cast<std::uint64_t>((p.value() - 1) / 2)) == p.value() - 1) return a;
  }
  throw Error("no quadratic non-residue found mod " + std::to_string(p.value()));
}

}  // namespace asw
