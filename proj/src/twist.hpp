#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace qci {

// Bicharacter on the gradings of two algebras: a c1 x c2 matrix of nonzero
// scalars extended multiplicatively to degree pairs.
struct TwistMap {
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::vector<std::vector<Scalar>> t;

  Scalar eval(const PrimeField& f, const Degree& dl, const Degree& dr) const;
};

TwistMap trivial_twist(std::size_t c1, std::size_t c2);

// Bicharacter that realizes a QCI as the twisted product of its restrictions
// to the generator set I and the complement: t[i][j] = q[Ic_j][I_i].
TwistMap standard_twist(const QciAlgebra& A, const std::vector<std::size_t>& I);

// Algebra on left (x) right whose cross terms pick up the twist:
// (u1 (x) u2) * (v1 (x) v2) = t(deg v1, deg u2) u1 v1 (x) u2 v2,
// on basis indices u1 * dim(right) + u2.
struct TwistedAlgebra {
  Algebra::Ptr core;
  Algebra::Ptr left;
  Algebra::Ptr right;
  TwistMap twist;

  std::size_t dim() const { return core->dim(); }
};

TwistedAlgebra twisted_product(Algebra::Ptr left, Algebra::Ptr right, const TwistMap& t);

// Sorted copies of I and its complement in {0..c-1}; throws unless I is a
// proper nonempty duplicate-free subset.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_generators(
    std::size_t c, std::vector<std::size_t> I);

// Restriction of A to the generators listed in S (strictly increasing).
QciAlgebra subalgebra_on(const QciAlgebra& A, const std::vector<std::size_t>& S);

// Relabels the generators of A as (sorted I, sorted I^c) and compares every
// structure constant of the relabeled algebra with the twisted product of the
// two restrictions under the standard twist.
bool decomposition_matches(const QciAlgebra& A, const std::vector<std::size_t>& I);

}  // namespace qci
