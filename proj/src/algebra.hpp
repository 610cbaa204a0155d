#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"

namespace qci {

// Multidegree in Z^g; algebra basis elements and module basis vectors carry one.
using Degree = std::vector<std::int32_t>;

Degree degree_concat(const Degree& a, const Degree& b);
Degree degree_add(const Degree& a, const Degree& b);
bool degree_is_zero(const Degree& d);

// Product of two basis elements: either zero (coeff == 0) or a scalar multiple
// of a single basis element. Everything this library builds is monomial in
// this sense, which keeps multiplication tables one entry per pair.
struct BasisProduct {
  Scalar coeff = 0;
  std::uint32_t index = 0;
  bool is_zero() const { return coeff == 0; }
  bool operator==(const BasisProduct& o) const {
    return coeff == o.coeff && (coeff == 0 || index == o.index);
  }
};

// Immutable runtime core shared by quantum complete intersections, their
// twisted products and enveloping algebras. Local, Z^g-graded, with the unit
// as the only degree-zero basis element; the radical is the span of the rest.
// Products come from a self-contained rule; a full table is cached for small
// dimensions and computed on the fly beyond that.
class Algebra final {
public:
  using Ptr = std::shared_ptr<const Algebra>;
  using ProductRule = std::function<BasisProduct(std::uint32_t, std::uint32_t)>;

  static constexpr std::size_t kTableCacheLimit = 256;

  Algebra(PrimeField field, std::vector<Degree> degrees, std::uint32_t unit,
          std::vector<std::uint32_t> gens, ProductRule rule);

  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return degrees_.size(); }
  std::size_t grading_rank() const { return grading_rank_; }
  std::uint32_t unit() const { return unit_; }
  const Degree& degree(std::size_t i) const { return degrees_[i]; }

  std::size_t gen_count() const { return gens_.size(); }
  std::uint32_t gen_basis(std::size_t g) const { return gens_[g]; }
  const Degree& gen_degree(std::size_t g) const { return degrees_[gens_[g]]; }
  // Least k with g^k = 0.
  std::size_t gen_nilpotency(std::size_t g) const { return nilpotency_[g]; }
  // kappa with g_i g_j = kappa g_j g_i (1 when both products vanish).
  Scalar gen_commutation(std::size_t i, std::size_t j) const { return commutation_[i * gens_.size() + j]; }

  BasisProduct basis_product(std::uint32_t u, std::uint32_t v) const {
    if (table_) return (*table_)[std::size_t{u} * dim() + v];
    return rule_(u, v);
  }

  // basis b = coeff * gen * rest for any non-unit b; used to build module
  // actions of all basis elements out of generator actions.
  struct Decomp {
    std::uint32_t gen = 0;
    std::uint32_t rest = 0;
    Scalar coeff = 0;
  };
  const Decomp& decomp(std::size_t basis) const { return decomp_[basis]; }

  // Matrix of left multiplication by a generator on the algebra itself,
  // built on demand (cheap: one product per column).
  Mat gen_left_mult(std::size_t g) const;

private:
  PrimeField field_;
  std::vector<Degree> degrees_;
  std::size_t grading_rank_;
  std::uint32_t unit_;
  std::vector<std::uint32_t> gens_;
  ProductRule rule_;
  std::optional<std::vector<BasisProduct>> table_;
  std::vector<Decomp> decomp_;
  std::vector<std::size_t> nilpotency_;
  std::vector<Scalar> commutation_;
};

// Element of an algebra as a dense coefficient vector over its basis.
struct Element {
  Algebra::Ptr alg;
  std::vector<Scalar> c;

  bool is_zero() const;
};

Element element_zero(Algebra::Ptr a);
Element element_unit(Algebra::Ptr a);
Element element_basis(Algebra::Ptr a, std::uint32_t idx);
Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator*(const Element& x, const Element& y);
Element element_scale(Scalar s, const Element& x);
bool operator==(const Element& x, const Element& y);

// A quantum complete intersection k<x_1..x_c> / (x_i^{a_i}, x_i x_j - q_ij x_j x_i).
// Basis monomials are normal forms x_1^{e_1} ... x_c^{e_c} enumerated
// lexicographically on exponent vectors; dim = prod a_i.
struct QciAlgebra {
  Algebra::Ptr core;
  std::uint64_t p = 0;
  std::vector<std::uint32_t> a;        // exponent bounds, each >= 2
  std::vector<std::vector<Scalar>> q;  // commutation matrix: q_ii = 1, q_ij q_ji = 1
  std::vector<std::uint64_t> stride;   // mixed-radix strides of the basis order
  std::vector<std::vector<std::uint32_t>> exps;  // exponent vector per basis index
  std::uint32_t socle = 0;             // index of x^(a_1-1, ..., a_c-1)

  std::size_t c() const { return a.size(); }
  std::size_t dim() const { return exps.size(); }
  std::uint32_t index_of(const std::vector<std::uint32_t>& e) const;
};

QciAlgebra make_qci(std::uint64_t p, std::vector<std::uint32_t> a,
                    std::vector<std::vector<Scalar>> q);

// Named families.
QciAlgebra exterior_algebra(std::uint64_t p, std::size_t c);
QciAlgebra truncated_polynomial(std::uint64_t p, std::size_t c, std::uint32_t a);
// All q_ij = q for i < j; requires q^(a-1) = 1.
QciAlgebra root_of_unity_qci(std::uint64_t p, std::size_t c, std::uint32_t a, Scalar q);

// The socle-coefficient functional phi(1) and its pairing phi(1)(uv).
// Construction verifies nondegeneracy: complementary monomials pair to a unit,
// and for moderate dimensions the full Gram matrix is checked invertible.
struct FrobeniusForm {
  std::uint32_t socle = 0;
  Scalar apply(const QciAlgebra& A, const Element& x) const;
  Scalar pair(const QciAlgebra& A, std::uint32_t u, std::uint32_t v) const;
};

FrobeniusForm frobenius_form(const QciAlgebra& A);

// The Nakayama automorphism acts diagonally: x_w -> gamma_w x_w with
// gamma_w = prod_i q_iw^{a_i - 1}. nakayama() verifies the defining identity
// phi(1)(y x) = phi(1)(nu(x) y) on all basis pairs before returning.
struct NakayamaInfo {
  std::vector<Scalar> gamma;
  bool symmetric = false;
};

NakayamaInfo nakayama(const QciAlgebra& A);
bool is_symmetric(const QciAlgebra& A);

// Scalar by which the Nakayama automorphism rescales the basis monomial with
// exponent vector e: prod_w gamma_w^{e_w}.
Scalar nakayama_scalar(const QciAlgebra& A, const std::vector<Scalar>& gamma,
                       const std::vector<std::uint32_t>& e);

// 2c-generator double with q' = [[q, q^T], [q^T, q]] and a' = (a, a);
// always symmetric. Construction cross-checks the entrywise case table and
// that the first-block subalgebra reproduces A's structure constants.
QciAlgebra symmetric_double(const QciAlgebra& A);

QciAlgebra opposite(const QciAlgebra& A);

}  // namespace qci
