#pragma once

#include <cstdint>

#include "error.hpp"

namespace qci {

// Residues mod p, always kept in [0, p).
using Scalar = std::uint64_t;

bool is_prime(std::uint64_t n);

// Arithmetic in F_p for a prime p < 2^31. The bound keeps every product
// inside uint64 and lets matrices store entries as uint32.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }

  Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return (a + p_ - b) % p_; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % p_; }

  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  // a^e for e >= 0 by binary powering.
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  // a^e for any integer e; negative exponents go through the inverse.
  Scalar pow_i(Scalar a, std::int64_t e) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

// Least k >= 1 with x^k = 1; requires x != 0. Always divides p - 1.
std::uint64_t multiplicative_order(const PrimeField& f, Scalar x);

}  // namespace qci
