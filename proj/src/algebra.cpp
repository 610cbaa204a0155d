#include "algebra.hpp"

#include <algorithm>

namespace qci {

Degree degree_concat(const Degree& a, const Degree& b) {
  Degree r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Degree degree_add(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw Error(Err::BadParams, "degree rank mismatch");
  Degree r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool degree_is_zero(const Degree& d) {
  return std::all_of(d.begin(), d.end(), [](std::int32_t x) { return x == 0; });
}

Algebra::Algebra(PrimeField field, std::vector<Degree> degrees, std::uint32_t unit,
                 std::vector<std::uint32_t> gens, ProductRule rule)
    : field_(field),
      degrees_(std::move(degrees)),
      grading_rank_(degrees_.empty() ? 0 : degrees_[0].size()),
      unit_(unit),
      gens_(std::move(gens)),
      rule_(std::move(rule)) {
  const std::size_t d = degrees_.size();
  if (d == 0) throw Error(Err::BadParams, "algebra needs at least the unit");
  for (const Degree& deg : degrees_)
    if (deg.size() != grading_rank_) throw Error(Err::BadParams, "inconsistent grading rank");
  if (unit_ >= d) throw Error(Err::BadParams, "unit index out of range");
  for (std::size_t i = 0; i < d; ++i) {
    if (degree_is_zero(degrees_[i]) != (i == unit_))
      throw Error(Err::Internal, "algebra is not local: degree zero must be exactly the unit");
  }
  for (std::uint32_t g : gens_)
    if (g >= d) throw Error(Err::BadParams, "generator index out of range");

  if (d <= kTableCacheLimit) {
    std::vector<BasisProduct> table(d * d);
    for (std::uint32_t u = 0; u < d; ++u)
      for (std::uint32_t v = 0; v < d; ++v) {
        BasisProduct p = rule_(u, v);
        if (!p.is_zero()) {
          if (p.index >= d) throw Error(Err::Internal, "product rule returned bad index");
          if (degree_add(degrees_[u], degrees_[v]) != degrees_[p.index])
            throw Error(Err::Internal, "product rule breaks the grading");
        }
        table[std::size_t{u} * d + v] = p;
      }
    table_ = std::move(table);
  }

  for (std::uint32_t v = 0; v < d; ++v) {
    if (!(basis_product(unit_, v) == BasisProduct{1, v}) ||
        !(basis_product(v, unit_) == BasisProduct{1, v}))
      throw Error(Err::Internal, "unit does not act as identity");
  }

  decomp_.assign(d, Decomp{});
  for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
    for (std::uint32_t w = 0; w < d; ++w) {
      BasisProduct p = basis_product(gens_[gi], w);
      if (p.is_zero() || p.index == unit_) continue;
      if (decomp_[p.index].coeff == 0)
        decomp_[p.index] = Decomp{static_cast<std::uint32_t>(gi), w, p.coeff};
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    if (i != unit_ && decomp_[i].coeff == 0)
      throw Error(Err::Internal, "basis element unreachable from generators");

  nilpotency_.resize(gens_.size());
  for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
    std::uint32_t cur = gens_[gi];
    std::size_t k = 1;
    while (true) {
      BasisProduct p = basis_product(gens_[gi], cur);
      ++k;
      if (p.is_zero()) break;
      cur = p.index;
      if (k > d + 1) throw Error(Err::BadParams, "generator is not nilpotent");
    }
    nilpotency_[gi] = k;
  }

  const std::size_t n = gens_.size();
  commutation_.assign(n * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BasisProduct ij = basis_product(gens_[i], gens_[j]);
      BasisProduct ji = basis_product(gens_[j], gens_[i]);
      if (ij.is_zero() != ji.is_zero())
        throw Error(Err::Internal, "generator products vanish asymmetrically");
      if (ij.is_zero()) continue;
      if (ij.index != ji.index)
        throw Error(Err::Internal, "generator products land on different monomials");
      commutation_[i * n + j] = field_.div(ij.coeff, ji.coeff);
    }
}

Mat Algebra::gen_left_mult(std::size_t g) const {
  const std::size_t d = dim();
  Mat m(d, d);
  for (std::uint32_t w = 0; w < d; ++w) {
    BasisProduct p = basis_product(gens_[g], w);
    if (!p.is_zero()) m.at(p.index, w) = static_cast<std::uint32_t>(p.coeff);
  }
  return m;
}

bool Element::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](Scalar x) { return x == 0; });
}

Element element_zero(Algebra::Ptr a) { return Element{a, std::vector<Scalar>(a->dim(), 0)}; }

Element element_unit(Algebra::Ptr a) {
  Element e = element_zero(a);
  e.c[a->unit()] = 1;
  return e;
}

Element element_basis(Algebra::Ptr a, std::uint32_t idx) {
  if (idx >= a->dim()) throw Error(Err::BadParams, "basis index out of range");
  Element e = element_zero(a);
  e.c[idx] = 1;
  return e;
}

namespace {
void check_same_parent(const Element& x, const Element& y) {
  if (x.alg != y.alg)
    throw Error(Err::MixedParents, "elements belong to different algebras");
}
}  // namespace

Element operator+(const Element& x, const Element& y) {
  check_same_parent(x, y);
  Element r = x;
  const PrimeField& f = x.alg->field();
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.add(r.c[i], y.c[i]);
  return r;
}

Element operator-(const Element& x, const Element& y) {
  check_same_parent(x, y);
  Element r = x;
  const PrimeField& f = x.alg->field();
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = f.sub(r.c[i], y.c[i]);
  return r;
}

Element operator*(const Element& x, const Element& y) {
  check_same_parent(x, y);
  const PrimeField& f = x.alg->field();
  Element r = element_zero(x.alg);
  for (std::uint32_t u = 0; u < x.c.size(); ++u) {
    if (x.c[u] == 0) continue;
    for (std::uint32_t v = 0; v < y.c.size(); ++v) {
      if (y.c[v] == 0) continue;
      BasisProduct p = x.alg->basis_product(u, v);
      if (p.is_zero()) continue;
      r.c[p.index] = f.add(r.c[p.index], f.mul(f.mul(x.c[u], y.c[v]), p.coeff));
    }
  }
  return r;
}

Element element_scale(Scalar s, const Element& x) {
  Element r = x;
  const PrimeField& f = x.alg->field();
  for (auto& v : r.c) v = f.mul(s, v);
  return r;
}

bool operator==(const Element& x, const Element& y) {
  check_same_parent(x, y);
  return x.c == y.c;
}

std::uint32_t QciAlgebra::index_of(const std::vector<std::uint32_t>& e) const {
  if (e.size() != a.size()) throw Error(Err::BadParams, "exponent vector length mismatch");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] >= a[i]) throw Error(Err::BadParams, "exponent out of range");
    idx += std::uint64_t{e[i]} * stride[i];
  }
  return static_cast<std::uint32_t>(idx);
}

QciAlgebra make_qci(std::uint64_t p, std::vector<std::uint32_t> a,
                    std::vector<std::vector<Scalar>> q) {
  PrimeField f(p);
  const std::size_t c = a.size();
  if (c == 0) throw Error(Err::BadParams, "need at least one generator");
  if (q.size() != c) throw Error(Err::BadCommutationMatrix, "commutation matrix must be c x c");
  for (auto& row : q) {
    if (row.size() != c) throw Error(Err::BadCommutationMatrix, "commutation matrix must be c x c");
    for (auto& x : row) {
      x %= p;
      if (x == 0) throw Error(Err::BadCommutationMatrix, "commutation entries must be nonzero");
    }
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (q[i][i] != 1) throw Error(Err::BadCommutationMatrix, "diagonal entries must be 1");
    for (std::size_t j = 0; j < c; ++j)
      if (f.mul(q[i][j], q[j][i]) != 1)
        throw Error(Err::BadCommutationMatrix, "q_ij q_ji must be 1");
  }
  std::uint64_t dim = 1;
  for (std::uint32_t ai : a) {
    if (ai < 2) throw Error(Err::BadExponent, "exponents must be at least 2");
    dim *= ai;
    if (dim > 65536) throw Error(Err::ResourceLimit, "algebra dimension exceeds 65536");
  }

  std::vector<std::uint64_t> stride(c);
  stride[c - 1] = 1;
  for (std::size_t i = c - 1; i > 0; --i) stride[i - 1] = stride[i] * a[i];

  std::vector<std::vector<std::uint32_t>> exps(dim, std::vector<std::uint32_t>(c));
  std::vector<Degree> degrees(dim, Degree(c));
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    for (std::size_t i = 0; i < c; ++i) {
      exps[idx][i] = static_cast<std::uint32_t>((idx / stride[i]) % a[i]);
      degrees[idx][i] = static_cast<std::int32_t>(exps[idx][i]);
    }
  }

  std::vector<std::uint32_t> gens(c);
  for (std::size_t i = 0; i < c; ++i) gens[i] = static_cast<std::uint32_t>(stride[i]);

  // x^e * x^f = prod_{j < i} q_ij^{e_i f_j} x^{e+f}, zero on exponent overflow.
  // Within bounds the mixed-radix index is additive, so no re-decode is needed.
  auto rule = [f, a, q, stride, c](std::uint32_t u, std::uint32_t v) -> BasisProduct {
    Scalar coeff = 1;
    for (std::size_t i = 0; i < c; ++i) {
      const std::uint64_t ei = (u / stride[i]) % a[i];
      const std::uint64_t fi = (v / stride[i]) % a[i];
      if (ei + fi >= a[i]) return BasisProduct{};
      if (ei == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        const std::uint64_t fj = (v / stride[j]) % a[j];
        if (fj) coeff = f.mul(coeff, f.pow(q[i][j], ei * fj));
      }
    }
    return BasisProduct{coeff, u + v};
  };

  QciAlgebra A;
  A.p = p;
  A.a = std::move(a);
  A.q = std::move(q);
  A.stride = std::move(stride);
  A.exps = std::move(exps);
  A.socle = static_cast<std::uint32_t>(dim - 1);
  A.core = std::make_shared<Algebra>(f, std::move(degrees), 0, std::move(gens), rule);
  return A;
}

QciAlgebra exterior_algebra(std::uint64_t p, std::size_t c) {
  PrimeField f(p);
  std::vector<std::vector<Scalar>> q(c, std::vector<Scalar>(c, f.neg(1)));
  for (std::size_t i = 0; i < c; ++i) q[i][i] = 1;
  return make_qci(p, std::vector<std::uint32_t>(c, 2), std::move(q));
}

QciAlgebra truncated_polynomial(std::uint64_t p, std::size_t c, std::uint32_t a) {
  std::vector<std::vector<Scalar>> q(c, std::vector<Scalar>(c, 1));
  return make_qci(p, std::vector<std::uint32_t>(c, a), std::move(q));
}

QciAlgebra root_of_unity_qci(std::uint64_t p, std::size_t c, std::uint32_t a, Scalar qval) {
  PrimeField f(p);
  qval %= p;
  if (qval == 0) throw Error(Err::BadParams, "q must be nonzero");
  if (a < 2) throw Error(Err::BadExponent, "exponents must be at least 2");
  if (f.pow(qval, a - 1) != 1)
    throw Error(Err::BadParams, "family requires q^(a-1) = 1");
  std::vector<std::vector<Scalar>> q(c, std::vector<Scalar>(c, 1));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (i < j) q[i][j] = qval;
      if (i > j) q[i][j] = f.inv(qval);
    }
  return make_qci(p, std::vector<std::uint32_t>(c, a), std::move(q));
}

Scalar FrobeniusForm::apply(const QciAlgebra& A, const Element& x) const {
  if (x.alg != A.core) throw Error(Err::MixedParents, "element does not live in this algebra");
  return x.c[socle];
}

Scalar FrobeniusForm::pair(const QciAlgebra& A, std::uint32_t u, std::uint32_t v) const {
  BasisProduct p = A.core->basis_product(u, v);
  return (!p.is_zero() && p.index == socle) ? p.coeff : 0;
}

FrobeniusForm frobenius_form(const QciAlgebra& A) {
  FrobeniusForm phi;
  phi.socle = A.socle;
  const std::size_t d = A.dim();
  const PrimeField& f = A.core->field();
  // complementary monomials must pair to a unit, so the pairing has a
  // permutation shape and phi(1)(- . -) is nondegenerate
  for (std::uint32_t u = 0; u < d; ++u) {
    const std::uint32_t v = A.socle - u;
    if (phi.pair(A, u, v) == 0)
      throw Error(Err::Internal, "socle pairing degenerate on complementary monomials");
  }
  if (d <= 512) {
    Mat gram(d, d);
    for (std::uint32_t u = 0; u < d; ++u)
      for (std::uint32_t v = 0; v < d; ++v)
        gram.at(u, v) = static_cast<std::uint32_t>(phi.pair(A, u, v));
    if (rank(f, gram) != d)
      throw Error(Err::Internal, "Gram matrix of the socle form is singular");
  }
  return phi;
}

Scalar nakayama_scalar(const QciAlgebra& A, const std::vector<Scalar>& gamma,
                       const std::vector<std::uint32_t>& e) {
  const PrimeField& f = A.core->field();
  Scalar s = 1;
  for (std::size_t w = 0; w < e.size(); ++w)
    if (e[w]) s = f.mul(s, f.pow(gamma[w], e[w]));
  return s;
}

namespace {
std::vector<Scalar> nakayama_gammas(const QciAlgebra& A) {
  const PrimeField& f = A.core->field();
  const std::size_t c = A.c();
  std::vector<Scalar> gamma(c, 1);
  for (std::size_t w = 0; w < c; ++w)
    for (std::size_t i = 0; i < c; ++i)
      gamma[w] = f.mul(gamma[w], f.pow(A.q[i][w], A.a[i] - 1));
  return gamma;
}
}  // namespace

NakayamaInfo nakayama(const QciAlgebra& A) {
  const PrimeField& f = A.core->field();
  NakayamaInfo info;
  info.gamma = nakayama_gammas(A);
  info.symmetric = std::all_of(info.gamma.begin(), info.gamma.end(),
                               [](Scalar g) { return g == 1; });
  FrobeniusForm phi = frobenius_form(A);
  // defining identity, all basis pairs: phi(1)(y x) = phi(1)(nu(x) y)
  const std::size_t d = A.dim();
  for (std::uint32_t y = 0; y < d; ++y)
    for (std::uint32_t x = 0; x < d; ++x) {
      const Scalar lhs = phi.pair(A, y, x);
      const Scalar nu = nakayama_scalar(A, info.gamma, A.exps[x]);
      const Scalar rhs = f.mul(nu, phi.pair(A, x, y));
      if (lhs != rhs) throw Error(Err::Internal, "Nakayama identity failed");
    }
  return info;
}

bool is_symmetric(const QciAlgebra& A) {
  std::vector<Scalar> gamma = nakayama_gammas(A);
  return std::all_of(gamma.begin(), gamma.end(), [](Scalar g) { return g == 1; });
}

QciAlgebra symmetric_double(const QciAlgebra& A) {
  const std::size_t c = A.c();
  const PrimeField& f = A.core->field();
  std::vector<std::uint32_t> a2 = A.a;
  a2.insert(a2.end(), A.a.begin(), A.a.end());
  std::vector<std::vector<Scalar>> q2(2 * c, std::vector<Scalar>(2 * c));
  for (std::size_t u = 0; u < c; ++u)
    for (std::size_t v = 0; v < c; ++v) {
      q2[u][v] = A.q[u][v];          // block (1,1): q
      q2[u][c + v] = A.q[v][u];      // block (1,2): q^T
      q2[c + u][v] = A.q[v][u];      // block (2,1): q^T
      q2[c + u][c + v] = A.q[u][v];  // block (2,2): q
    }

  // independent entrywise cross-check against the case table
  for (std::size_t u = 0; u < 2 * c; ++u)
    for (std::size_t v = 0; v < 2 * c; ++v) {
      Scalar expect;
      if (u < c && v < c) expect = A.q[u][v];
      else if (u >= c && v < c) expect = A.q[v][u - c];
      else if (u < c && v >= c) expect = A.q[v - c][u];
      else expect = A.q[u - c][v - c];
      if (q2[u][v] != expect)
        throw Error(Err::Internal, "double block matrix disagrees with its case table");
    }

  QciAlgebra D = make_qci(A.p, std::move(a2), std::move(q2));

  if (!is_symmetric(D)) throw Error(Err::Internal, "double is not symmetric");

  // the first-block subalgebra must reproduce A's structure constants
  const std::uint64_t shift = A.dim();
  for (std::uint32_t x = 0; x < A.dim(); ++x)
    for (std::uint32_t y = 0; y < A.dim(); ++y) {
      BasisProduct pa = A.core->basis_product(x, y);
      BasisProduct pd = D.core->basis_product(static_cast<std::uint32_t>(x * shift),
                                              static_cast<std::uint32_t>(y * shift));
      const bool same = pa.is_zero() ? pd.is_zero()
                                     : (!pd.is_zero() && pd.coeff == pa.coeff &&
                                        pd.index == pa.index * shift);
      if (!same) throw Error(Err::Internal, "double does not embed A as a subalgebra");
    }
  (void)f;
  return D;
}

QciAlgebra opposite(const QciAlgebra& A) {
  const std::size_t c = A.c();
  std::vector<std::vector<Scalar>> qt(c, std::vector<Scalar>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) qt[i][j] = A.q[j][i];
  return make_qci(A.p, A.a, std::move(qt));
}

}  // namespace qci
