#include "field.hpp"

namespace qci {

const char* err_name(Err code) {
  switch (code) {
    case Err::NotPrime: return "NotPrime";
    case Err::ZeroElement: return "ZeroElement";
    case Err::Inconsistent: return "Inconsistent";
    case Err::BadCommutationMatrix: return "BadCommutationMatrix";
    case Err::BadExponent: return "BadExponent";
    case Err::MixedParents: return "MixedParents";
    case Err::BadSplit: return "BadSplit";
    case Err::TwistMismatch: return "TwistMismatch";
    case Err::InhomogeneousRelation: return "InhomogeneousRelation";
    case Err::ResourceLimit: return "ResourceLimit";
    case Err::BadParams: return "BadParams";
    case Err::ParseError: return "ParseError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(Err::NotPrime, "field characteristic must be prime, got " + std::to_string(p));
  if (p >= (std::uint64_t{1} << 31))
    throw Error(Err::BadParams, "characteristic too large (needs p < 2^31), got " + std::to_string(p));
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar r = 1, base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Scalar PrimeField::inv(Scalar a) const {
  a %= p_;
  if (a == 0) throw Error(Err::ZeroElement, "division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Scalar PrimeField::pow_i(Scalar a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

std::uint64_t multiplicative_order(const PrimeField& f, Scalar x) {
  x %= f.p();
  if (x == 0) throw Error(Err::ZeroElement, "multiplicative order of zero is undefined");
  Scalar y = x;
  std::uint64_t k = 1;
  while (y != 1) {
    y = f.mul(y, x);
    ++k;
    if (k > f.p()) throw Error(Err::Internal, "order search exceeded group size");
  }
  return k;
}

}  // namespace qci
