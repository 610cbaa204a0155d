#include "module.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace qci {

namespace {

std::int64_t total_degree(const Degree& d) {
  std::int64_t s = 0;
  for (auto v : d) s += v;
  return s;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace

Module make_module(Algebra::Ptr alg, std::vector<Mat> gen_actions,
                   std::optional<std::vector<Degree>> degrees) {
  if (!alg) throw Error(Err::BadParams, "module needs an algebra");
  const PrimeField& f = alg->field();
  const std::size_t g = alg->gen_count();
  if (gen_actions.size() != g) throw Error(Err::BadParams, "one action matrix per generator required");
  const std::size_t n = g ? gen_actions[0].rows : 0;
  for (const Mat& m : gen_actions) {
    if (m.rows != n || m.cols != n)
      throw Error(Err::BadParams, "action matrices must be square and equally sized");
    for (auto v : m.a)
      if (v >= f.p()) throw Error(Err::BadParams, "action entries must be reduced residues");
  }

  for (std::size_t i = 0; i < g; ++i) {
    Mat pw = Mat::identity(n);
    for (std::size_t k = 0; k < alg->gen_nilpotency(i); ++k) pw = mat_mul(f, pw, gen_actions[i]);
    if (!pw.is_zero()) throw Error(Err::BadParams, "generator action violates its nilpotency bound");
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Mat lhs = mat_mul(f, gen_actions[i], gen_actions[j]);
      const Mat rhs =
          mat_scale(f, alg->gen_commutation(i, j), mat_mul(f, gen_actions[j], gen_actions[i]));
      if (!(lhs == rhs)) throw Error(Err::BadParams, "generator actions violate commutation");
    }

  if (degrees) {
    if (degrees->size() != n) throw Error(Err::BadParams, "one degree per basis vector required");
    for (const Degree& d : *degrees)
      if (d.size() != alg->grading_rank())
        throw Error(Err::BadParams, "degree length must match the grading rank");
    for (std::size_t i = 0; i < g; ++i) {
      const Degree& dg = alg->gen_degree(i);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          if (gen_actions[i].at(r, s) != 0 && (*degrees)[r] != degree_add((*degrees)[s], dg))
            throw Error(Err::BadParams, "generator action is not homogeneous");
    }
  }

  if (alg->dim() * n * n > (std::size_t{1} << 24))
    throw Error(Err::ResourceLimit, "module too large for cached basis actions");

  std::vector<std::uint32_t> order(alg->dim());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return total_degree(alg->degree(x)) < total_degree(alg->degree(y));
  });

  std::vector<Mat> basis(alg->dim());
  std::vector<char> done(alg->dim(), 0);
  for (std::uint32_t b : order) {
    if (b == alg->unit()) {
      basis[b] = Mat::identity(n);
    } else {
      const Algebra::Decomp& d = alg->decomp(b);
      if (!done[d.rest]) throw Error(Err::Internal, "decomposition chain out of degree order");
      basis[b] = mat_scale(f, f.inv(d.coeff), mat_mul(f, gen_actions[d.gen], basis[d.rest]));
    }
    done[b] = 1;
  }

  Module out;
  out.alg = std::move(alg);
  out.n = n;
  out.gen_actions = std::move(gen_actions);
  out.basis_actions = std::move(basis);
  out.degrees = std::move(degrees);
  return out;
}

Mat element_action(const Module& m, const Element& x) {
  if (x.alg != m.alg) throw Error(Err::MixedParents, "element and module algebras differ");
  const PrimeField& f = m.alg->field();
  Mat out(m.n, m.n);
  for (std::size_t b = 0; b < x.c.size(); ++b)
    if (x.c[b]) out = mat_add(f, out, mat_scale(f, x.c[b], m.basis_actions[b]));
  return out;
}

Module trivial_module(Algebra::Ptr alg) {
  if (!alg) throw Error(Err::BadParams, "module needs an algebra");
  std::vector<Mat> acts(alg->gen_count(), Mat(1, 1));
  std::vector<Degree> degs{Degree(alg->grading_rank(), 0)};
  return make_module(std::move(alg), std::move(acts), std::move(degs));
}

Module free_module(Algebra::Ptr alg, std::size_t r, std::vector<Degree> shifts) {
  if (!alg) throw Error(Err::BadParams, "module needs an algebra");
  if (shifts.empty()) shifts.assign(r, Degree(alg->grading_rank(), 0));
  if (shifts.size() != r) throw Error(Err::BadParams, "one shift per free generator required");
  const std::size_t d = alg->dim();
  const std::size_t n = r * d;
  std::vector<Mat> acts;
  acts.reserve(alg->gen_count());
  for (std::size_t g = 0; g < alg->gen_count(); ++g) {
    const Mat l = alg->gen_left_mult(g);
    Mat big(n, n);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v)
          if (l.at(u, v)) big.at(j * d + u, j * d + v) = l.at(u, v);
    acts.push_back(std::move(big));
  }
  std::vector<Degree> degs;
  degs.reserve(n);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t b = 0; b < d; ++b) degs.push_back(degree_add(alg->degree(b), shifts[j]));
  return make_module(std::move(alg), std::move(acts), std::move(degs));
}

void close_under_actions(const PrimeField& f, EchelonSpace& space, const std::vector<Mat>& actions,
                         std::vector<Vec> seeds) {
  std::vector<Vec> queue;
  for (Vec& s : seeds)
    if (space.insert(s)) queue.push_back(std::move(s));
  while (!queue.empty()) {
    const Vec v = std::move(queue.back());
    queue.pop_back();
    for (const Mat& a : actions) {
      Vec w = mat_apply(f, a, v);
      if (space.insert(w)) queue.push_back(std::move(w));
    }
  }
}

Module module_from_presentation(Algebra::Ptr alg, const std::vector<Degree>& shifts,
                                const std::vector<Vec>& relations, bool graded) {
  Module f0 = free_module(alg, shifts.size(), shifts);
  const PrimeField& f = alg->field();
  for (const Vec& rel : relations) {
    if (rel.size() != f0.n) throw Error(Err::BadParams, "relation length must match the free module");
    for (auto v : rel)
      if (v >= f.p()) throw Error(Err::BadParams, "relation entries must be reduced residues");
    if (graded) {
      const Degree* d0 = nullptr;
      for (std::size_t i = 0; i < rel.size(); ++i) {
        if (!rel[i]) continue;
        if (!d0)
          d0 = &(*f0.degrees)[i];
        else if (*d0 != (*f0.degrees)[i])
          throw Error(Err::InhomogeneousRelation, "relation mixes degrees");
      }
    }
  }

  EchelonSpace space(f, f0.n);
  close_under_actions(f, space, f0.gen_actions, relations);
  const std::vector<std::size_t> coords = space.nonpivot_rows();
  const std::size_t n = coords.size();

  std::vector<Mat> acts;
  acts.reserve(f0.gen_actions.size());
  for (const Mat& a : f0.gen_actions) {
    Mat q(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      Vec w(f0.n, 0);
      for (std::size_t u = 0; u < f0.n; ++u) w[u] = a.at(u, coords[k]);
      space.reduce(w);
      for (std::size_t t = 0; t < n; ++t) q.at(t, k) = w[coords[t]];
    }
    acts.push_back(std::move(q));
  }

  std::optional<std::vector<Degree>> degs;
  if (graded) {
    degs.emplace();
    degs->reserve(n);
    for (std::size_t k = 0; k < n; ++k) degs->push_back((*f0.degrees)[coords[k]]);
  }
  return make_module(std::move(alg), std::move(acts), std::move(degs));
}

Module dualize(const Module& m, Algebra::Ptr opposite_core) {
  if (!opposite_core) throw Error(Err::BadParams, "dual needs the opposite algebra");
  if (opposite_core->field().p() != m.alg->field().p() ||
      opposite_core->gen_count() != m.alg->gen_count())
    throw Error(Err::BadParams, "opposite algebra does not match");
  std::vector<Mat> acts;
  acts.reserve(m.gen_actions.size());
  for (const Mat& a : m.gen_actions) acts.push_back(mat_transpose(a));
  std::optional<std::vector<Degree>> degs;
  if (m.graded()) {
    degs.emplace();
    degs->reserve(m.n);
    for (const Degree& d : *m.degrees) {
      Degree neg(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
      degs->push_back(std::move(neg));
    }
  }
  return make_module(std::move(opposite_core), std::move(acts), std::move(degs));
}

Module direct_sum(const Module& x, const Module& y) {
  if (x.alg != y.alg) throw Error(Err::MixedParents, "direct sum needs a common algebra");
  const std::size_t n = x.n + y.n;
  std::vector<Mat> acts;
  acts.reserve(x.gen_actions.size());
  for (std::size_t g = 0; g < x.gen_actions.size(); ++g) {
    Mat big(n, n);
    for (std::size_t r = 0; r < x.n; ++r)
      for (std::size_t s = 0; s < x.n; ++s) big.at(r, s) = x.gen_actions[g].at(r, s);
    for (std::size_t r = 0; r < y.n; ++r)
      for (std::size_t s = 0; s < y.n; ++s) big.at(x.n + r, x.n + s) = y.gen_actions[g].at(r, s);
    acts.push_back(std::move(big));
  }
  std::optional<std::vector<Degree>> degs;
  if (x.graded() && y.graded()) {
    degs.emplace(*x.degrees);
    degs->insert(degs->end(), y.degrees->begin(), y.degrees->end());
  }
  return make_module(x.alg, std::move(acts), std::move(degs));
}

Module twisted_tensor_module(const TwistedAlgebra& t, const Module& m, const Module& n) {
  if (m.alg != t.left || n.alg != t.right)
    throw Error(Err::TwistMismatch, "modules must live over the twist factors");
  if (!m.graded() || !n.graded())
    throw Error(Err::BadParams, "twisted tensor module needs graded factors");
  const PrimeField& f = t.core->field();
  const std::size_t nm = m.n, nn = n.n, big = nm * nn;

  std::vector<Mat> acts;
  for (std::size_t g = 0; g < t.left->gen_count(); ++g) {
    Mat a(big, big);
    const Mat& mg = m.gen_actions[g];
    for (std::size_t r = 0; r < nm; ++r)
      for (std::size_t i = 0; i < nm; ++i)
        if (mg.at(r, i))
          for (std::size_t j = 0; j < nn; ++j) a.at(r * nn + j, i * nn + j) = mg.at(r, i);
    acts.push_back(std::move(a));
  }
  for (std::size_t h = 0; h < t.right->gen_count(); ++h) {
    Mat a(big, big);
    const Mat& nh = n.gen_actions[h];
    const Degree& dh = t.right->gen_degree(h);
    for (std::size_t i = 0; i < nm; ++i) {
      const Scalar tw = t.twist.eval(f, (*m.degrees)[i], dh);
      for (std::size_t s = 0; s < nn; ++s)
        for (std::size_t j = 0; j < nn; ++j)
          if (nh.at(s, j)) a.at(i * nn + s, i * nn + j) = f.mul(tw, nh.at(s, j));
    }
    acts.push_back(std::move(a));
  }

  std::vector<Degree> degs;
  degs.reserve(big);
  for (std::size_t i = 0; i < nm; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      degs.push_back(degree_concat((*m.degrees)[i], (*n.degrees)[j]));
  return make_module(t.core, std::move(acts), std::move(degs));
}

EnvelopingData enveloping_algebra(const QciAlgebra& a) {
  QciAlgebra op = opposite(a);
  const std::size_t c = a.c();
  TwistedAlgebra env = twisted_product(a.core, op.core, trivial_twist(c, c));
  const std::size_t d = a.dim();
  std::vector<Mat> acts;
  acts.reserve(2 * c);
  for (std::size_t g = 0; g < c; ++g) acts.push_back(a.core->gen_left_mult(g));
  for (std::size_t g = 0; g < c; ++g) {
    Mat r(d, d);
    const std::uint32_t gb = a.core->gen_basis(g);
    for (std::uint32_t v = 0; v < d; ++v) {
      const BasisProduct p = a.core->basis_product(v, gb);
      if (!p.is_zero()) r.at(p.index, v) = static_cast<std::uint32_t>(p.coeff);
    }
    acts.push_back(std::move(r));
  }
  Module bi = make_module(env.core, std::move(acts), std::nullopt);
  return EnvelopingData{std::move(env), std::move(bi)};
}

std::size_t hom_dim(const Module& m, const Module& n) {
  if (m.alg != n.alg) throw Error(Err::MixedParents, "hom needs a common algebra");
  const PrimeField& f = m.alg->field();
  const std::size_t gens = m.alg->gen_count();
  const std::size_t cols = n.n * m.n;
  if (cols == 0) return 0;
  Mat sys(gens * cols, cols);
  std::size_t row = 0;
  for (std::size_t g = 0; g < gens; ++g) {
    const Mat& a = m.gen_actions[g];
    const Mat& b = n.gen_actions[g];
    for (std::size_t r = 0; r < n.n; ++r)
      for (std::size_t s = 0; s < m.n; ++s) {
        for (std::size_t t = 0; t < n.n; ++t)
          if (b.at(r, t)) sys.at(row, t * m.n + s) = b.at(r, t);
        for (std::size_t u = 0; u < m.n; ++u)
          if (a.at(u, s)) {
            auto& cell = sys.at(row, r * m.n + u);
            cell = static_cast<std::uint32_t>(f.sub(cell, a.at(u, s)));
          }
        ++row;
      }
  }
  return nullity(f, sys);
}

Module random_module(std::mt19937_64& rng, Algebra::Ptr alg, const RandomModuleParams& params) {
  const PrimeField& f = alg->field();
  const std::size_t max_rank = std::max<std::size_t>(params.max_free_rank, 1);
  for (std::size_t attempt = 0; attempt < params.attempts; ++attempt) {
    const std::size_t r = 1 + rng() % max_rank;
    std::vector<Degree> shifts;
    shifts.reserve(r);
    for (std::size_t j = 0; j < r; ++j)
      shifts.push_back(alg->degree(static_cast<std::size_t>(rng() % alg->dim())));
    Module f0 = free_module(alg, r, shifts);

    const std::size_t nrel = rng() % (params.max_relations + 1);
    std::vector<Vec> rels;
    for (std::size_t k = 0; k < nrel; ++k) {
      Vec v(f0.n, 0);
      if (params.graded) {
        const Degree target = (*f0.degrees)[static_cast<std::size_t>(rng() % f0.n)];
        std::vector<std::size_t> sup;
        for (std::size_t i = 0; i < f0.n; ++i)
          if ((*f0.degrees)[i] == target) sup.push_back(i);
        for (std::size_t i : sup) v[i] = static_cast<std::uint32_t>(rng() % f.p());
        if (vec_is_zero(v)) v[sup[rng() % sup.size()]] = 1;
      } else {
        for (std::size_t i = 0; i < f0.n; ++i)
          if (rng() % 3 == 0) v[i] = static_cast<std::uint32_t>(rng() % f.p());
        if (vec_is_zero(v)) v[rng() % f0.n] = 1;
      }
      rels.push_back(std::move(v));
    }

    EchelonSpace space(f, f0.n);
    close_under_actions(f, space, f0.gen_actions, rels);
    const std::size_t q = f0.n - space.dim();
    if (q == 0 || q > params.max_dim) continue;
    return module_from_presentation(alg, shifts, rels, params.graded);
  }
  return trivial_module(std::move(alg));
}

}  // namespace qci
