#include "twist.hpp"

#include <algorithm>

#include "error.hpp"

namespace qci {

Scalar TwistMap::eval(const PrimeField& f, const Degree& dl, const Degree& dr) const {
  if (dl.size() != c1 || dr.size() != c2)
    throw Error(Err::TwistMismatch, "degree length does not match twist shape");
  Scalar out = 1;
  for (std::size_t i = 0; i < c1; ++i) {
    if (dl[i] == 0) continue;
    for (std::size_t j = 0; j < c2; ++j) {
      if (dr[j] == 0) continue;
      out = f.mul(out, f.pow_i(t[i][j], std::int64_t{dl[i]} * dr[j]));
    }
  }
  return out;
}

TwistMap trivial_twist(std::size_t c1, std::size_t c2) {
  return TwistMap{c1, c2, std::vector<std::vector<Scalar>>(c1, std::vector<Scalar>(c2, 1))};
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_generators(
    std::size_t c, std::vector<std::size_t> I) {
  std::sort(I.begin(), I.end());
  if (I.empty() || I.size() >= c) throw Error(Err::BadSplit, "need a proper nonempty generator subset");
  if (std::adjacent_find(I.begin(), I.end()) != I.end())
    throw Error(Err::BadSplit, "duplicate generator in split");
  if (I.back() >= c) throw Error(Err::BadSplit, "generator index out of range");
  std::vector<std::size_t> comp;
  for (std::size_t g = 0, k = 0; g < c; ++g) {
    if (k < I.size() && I[k] == g)
      ++k;
    else
      comp.push_back(g);
  }
  return {std::move(I), comp};
}

QciAlgebra subalgebra_on(const QciAlgebra& A, const std::vector<std::size_t>& S) {
  std::vector<std::uint32_t> a(S.size());
  std::vector<std::vector<Scalar>> q(S.size(), std::vector<Scalar>(S.size()));
  for (std::size_t i = 0; i < S.size(); ++i) {
    a[i] = A.a[S[i]];
    for (std::size_t j = 0; j < S.size(); ++j) q[i][j] = A.q[S[i]][S[j]];
  }
  return make_qci(A.p, std::move(a), std::move(q));
}

TwistMap standard_twist(const QciAlgebra& A, const std::vector<std::size_t>& I) {
  auto [left, right] = split_generators(A.c(), I);
  TwistMap t{left.size(), right.size(),
             std::vector<std::vector<Scalar>>(left.size(), std::vector<Scalar>(right.size()))};
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) t.t[i][j] = A.q[right[j]][left[i]];
  return t;
}

TwistedAlgebra twisted_product(Algebra::Ptr left, Algebra::Ptr right, const TwistMap& t) {
  if (!left || !right) throw Error(Err::BadParams, "twisted_product needs two factors");
  if (left->field().p() != right->field().p())
    throw Error(Err::TwistMismatch, "factors live over different fields");
  const PrimeField f = left->field();
  if (t.c1 != left->grading_rank() || t.c2 != right->grading_rank())
    throw Error(Err::TwistMismatch, "twist shape does not match factor gradings");
  if (t.t.size() != t.c1) throw Error(Err::TwistMismatch, "twist matrix has wrong row count");
  for (const auto& row : t.t) {
    if (row.size() != t.c2) throw Error(Err::TwistMismatch, "twist matrix has wrong column count");
    for (Scalar v : row)
      if (v == 0 || v >= f.p()) throw Error(Err::TwistMismatch, "twist entries must be nonzero residues");
  }

  const std::size_t dl = left->dim();
  const std::size_t dr = right->dim();
  if (dl * dr > 65536) throw Error(Err::ResourceLimit, "twisted product dimension above 65536");

  std::vector<Degree> degrees;
  degrees.reserve(dl * dr);
  for (std::size_t u1 = 0; u1 < dl; ++u1)
    for (std::size_t u2 = 0; u2 < dr; ++u2)
      degrees.push_back(degree_concat(left->degree(u1), right->degree(u2)));

  const std::uint32_t unit =
      static_cast<std::uint32_t>(std::size_t{left->unit()} * dr + right->unit());
  std::vector<std::uint32_t> gens;
  for (std::size_t g = 0; g < left->gen_count(); ++g)
    gens.push_back(static_cast<std::uint32_t>(std::size_t{left->gen_basis(g)} * dr + right->unit()));
  for (std::size_t g = 0; g < right->gen_count(); ++g)
    gens.push_back(static_cast<std::uint32_t>(std::size_t{left->unit()} * dr + right->gen_basis(g)));

  TwistMap tw = t;
  auto rule = [left, right, tw, f, dr](std::uint32_t u, std::uint32_t v) -> BasisProduct {
    const std::uint32_t u1 = static_cast<std::uint32_t>(u / dr);
    const std::uint32_t u2 = static_cast<std::uint32_t>(u % dr);
    const std::uint32_t v1 = static_cast<std::uint32_t>(v / dr);
    const std::uint32_t v2 = static_cast<std::uint32_t>(v % dr);
    const BasisProduct pl = left->basis_product(u1, v1);
    if (pl.is_zero()) return BasisProduct{};
    const BasisProduct pr = right->basis_product(u2, v2);
    if (pr.is_zero()) return BasisProduct{};
    Scalar coeff = f.mul(pl.coeff, pr.coeff);
    coeff = f.mul(coeff, tw.eval(f, left->degree(v1), right->degree(u2)));
    return BasisProduct{coeff, static_cast<std::uint32_t>(std::size_t{pl.index} * dr + pr.index)};
  };

  TwistedAlgebra out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.twist = std::move(tw);
  out.core = std::make_shared<const Algebra>(f, std::move(degrees), unit, std::move(gens),
                                             std::move(rule));
  return out;
}

bool decomposition_matches(const QciAlgebra& A, const std::vector<std::size_t>& I) {
  auto [li, ri] = split_generators(A.c(), I);
  std::vector<std::size_t> sigma = li;
  sigma.insert(sigma.end(), ri.begin(), ri.end());

  std::vector<std::uint32_t> pa(A.c());
  std::vector<std::vector<Scalar>> pq(A.c(), std::vector<Scalar>(A.c()));
  for (std::size_t r = 0; r < A.c(); ++r) {
    pa[r] = A.a[sigma[r]];
    for (std::size_t s = 0; s < A.c(); ++s) pq[r][s] = A.q[sigma[r]][sigma[s]];
  }
  QciAlgebra perm = make_qci(A.p, std::move(pa), std::move(pq));

  QciAlgebra B = subalgebra_on(A, li);
  QciAlgebra C = subalgebra_on(A, ri);
  TwistedAlgebra T = twisted_product(B.core, C.core, standard_twist(A, I));

  // Exponent-wise the basis orders agree: the permuted algebra indexes
  // (e_I, e_Ic) mixed-radix, the twisted product as idx_B * dim(C) + idx_C,
  // and those coincide. Compare every structure constant.
  if (perm.dim() != T.dim()) return false;
  const std::uint32_t d = static_cast<std::uint32_t>(perm.dim());
  for (std::uint32_t u = 0; u < d; ++u)
    for (std::uint32_t v = 0; v < d; ++v)
      if (!(perm.core->basis_product(u, v) == T.core->basis_product(u, v))) return false;
  return true;
}

}  // namespace qci
