#include "homology.hpp"

#include <algorithm>

#include "error.hpp"

namespace qci {

namespace {

std::uint64_t elim_cost(std::size_t rows, std::size_t cols) {
  std::uint64_t lo = std::min(rows, cols);
  std::uint64_t hi = std::max(rows, cols);
  return lo * lo * hi;
}

// y += s * (x_b . w) for w over the rank-r free module A^r, componentwise
// left multiplication by the basis element b.
void add_left_mult(const Algebra& a, std::uint32_t b, Scalar s, const Vec& w, std::size_t r,
                   Vec& y) {
  const PrimeField& f = a.field();
  const std::size_t d = a.dim();
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t off = j * d;
    for (std::size_t v = 0; v < d; ++v) {
      const std::uint32_t wv = w[off + v];
      if (!wv) continue;
      const BasisProduct p = a.basis_product(b, static_cast<std::uint32_t>(v));
      if (p.is_zero()) continue;
      auto& cell = y[off + p.index];
      cell = static_cast<std::uint32_t>(f.add(cell, f.mul(p.coeff, f.mul(s, wv))));
    }
  }
}

std::vector<Vec> columns_of(const Mat& m) {
  std::vector<Vec> cols(m.cols, Vec(m.rows));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) cols[c][r] = m.at(r, c);
  return cols;
}

}  // namespace

Resolution minimal_resolution(const Module& m, std::size_t window, const ResolutionBudget& budget) {
  const Algebra::Ptr alg = m.alg;
  const Algebra& a = *alg;
  const PrimeField& f = a.field();
  const std::size_t d = a.dim();
  const bool graded = m.graded();

  Resolution out;
  out.alg = alg;

  // minimal generators of M: coordinates complementary to J M
  EchelonSpace jm(f, m.n);
  for (const Mat& act : m.gen_actions)
    for (std::size_t cidx = 0; cidx < m.n; ++cidx) {
      Vec col(m.n);
      for (std::size_t rr = 0; rr < m.n; ++rr) col[rr] = act.at(rr, cidx);
      jm.insert(std::move(col));
    }
  const std::vector<std::size_t> coords = jm.nonpivot_rows();
  const std::size_t b0 = coords.size();
  if (b0 > budget.max_rank) throw Error(Err::ResourceLimit, "resolution rank above budget");
  out.betti.push_back(b0);
  if (graded) {
    std::vector<Degree> g0;
    g0.reserve(b0);
    for (std::size_t cdx : coords) g0.push_back((*m.degrees)[cdx]);
    out.gen_degrees.push_back(std::move(g0));
  }

  if (m.n * b0 * d > budget.max_step_entries)
    throw Error(Err::ResourceLimit, "resolution step above entry budget");
  if (elim_cost(m.n, b0 * d) > budget.max_elim_cost)
    throw Error(Err::ResourceLimit, "resolution elimination above cost budget");
  Mat pi(m.n, b0 * d);
  for (std::size_t t = 0; t < b0; ++t)
    for (std::size_t b = 0; b < d; ++b) {
      const Mat& act = m.basis_actions[b];
      for (std::size_t rr = 0; rr < m.n; ++rr) pi.at(rr, t * d + b) = act.at(rr, coords[t]);
    }
  Mat k = kernel_basis(f, pi);
  if (k.cols != b0 * d - m.n)
    throw Error(Err::Internal, "chosen generators fail to span the module");

  std::vector<Vec> syz = columns_of(k);
  std::size_t prev_rank = b0;
  std::vector<Degree> prev_deg = graded ? out.gen_degrees[0] : std::vector<Degree>{};

  for (std::size_t step = 1; step <= window; ++step) {
    const std::size_t amb = prev_rank * d;

    EchelonSpace js(f, amb);
    for (const Vec& w : syz)
      for (std::size_t g = 0; g < a.gen_count(); ++g) {
        Vec img(amb, 0);
        add_left_mult(a, a.gen_basis(g), 1, w, prev_rank, img);
        js.insert(std::move(img));
      }

    EchelonSpace probe = js;
    std::vector<std::size_t> pick;
    for (std::size_t idx = 0; idx < syz.size(); ++idx)
      if (probe.insert(syz[idx])) pick.push_back(idx);
    const std::size_t b = pick.size();
    if (js.dim() + b != syz.size())
      throw Error(Err::Internal, "radical quotient dimension mismatch");
    if (b > budget.max_rank) throw Error(Err::ResourceLimit, "resolution rank above budget");
    out.betti.push_back(b);

    std::vector<Degree> cur_deg;
    if (graded) {
      cur_deg.reserve(b);
      for (std::size_t idx : pick) {
        const Vec& w = syz[idx];
        Degree dg;
        bool found = false;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          if (!w[pos]) continue;
          Degree cd = degree_add(prev_deg[pos / d], a.degree(pos % d));
          if (!found) {
            dg = std::move(cd);
            found = true;
          } else if (cd != dg) {
            throw Error(Err::Internal, "syzygy generator is not homogeneous");
          }
        }
        cur_deg.push_back(std::move(dg));
      }
      out.gen_degrees.push_back(cur_deg);
    }

    FreeMap dmap;
    dmap.rows = prev_rank;
    dmap.cols = b;
    dmap.e.assign(prev_rank * b, Element{});
    for (std::size_t t = 0; t < b; ++t) {
      const Vec& w = syz[pick[t]];
      for (std::size_t j = 0; j < prev_rank; ++j) {
        Element el = element_zero(alg);
        for (std::size_t v = 0; v < d; ++v) el.c[v] = w[j * d + v];
        if (el.c[a.unit()] != 0)
          throw Error(Err::Internal, "differential entry outside the radical");
        dmap.at(j, t) = std::move(el);
      }
    }
    out.diff.push_back(std::move(dmap));

    if (out.diff.size() >= 2) {
      const FreeMap& d2 = out.diff.back();
      const FreeMap& d1 = out.diff[out.diff.size() - 2];
      for (std::size_t t = 0; t < d2.cols; ++t)
        for (std::size_t j = 0; j < d1.rows; ++j) {
          Element acc = element_zero(alg);
          for (std::size_t kk = 0; kk < d2.rows; ++kk)
            acc = acc + d2.at(kk, t) * d1.at(j, kk);
          if (!acc.is_zero()) throw Error(Err::Internal, "composite differential is nonzero");
        }
    }

    if (step == window) break;

    const std::size_t cols2 = b * d;
    if (amb * cols2 > budget.max_step_entries)
      throw Error(Err::ResourceLimit, "resolution step above entry budget");
    if (elim_cost(amb, cols2) > budget.max_elim_cost)
      throw Error(Err::ResourceLimit, "resolution elimination above cost budget");
    Mat pi2(amb, cols2);
    for (std::size_t t = 0; t < b; ++t) {
      const Vec& w = syz[pick[t]];
      for (std::size_t bb = 0; bb < d; ++bb) {
        Vec img(amb, 0);
        add_left_mult(a, static_cast<std::uint32_t>(bb), 1, w, prev_rank, img);
        for (std::size_t rr = 0; rr < amb; ++rr) pi2.at(rr, t * d + bb) = img[rr];
      }
    }
    const std::size_t sdim = syz.size();
    Mat k2 = kernel_basis(f, pi2);
    if (k2.cols != cols2 - sdim)
      throw Error(Err::Internal, "syzygy generators fail to span");
    syz = columns_of(k2);
    prev_rank = b;
    prev_deg = std::move(cur_deg);
  }
  return out;
}

std::vector<std::size_t> ext_dims_from(const Resolution& r, const Module& n, std::size_t window,
                                       const ResolutionBudget& budget) {
  if (n.alg != r.alg) throw Error(Err::MixedParents, "module algebra differs from the resolution");
  if (r.betti.size() < window + 2)
    throw Error(Err::BadParams, "resolution window too short for the requested Ext range");
  const PrimeField& f = n.alg->field();

  std::vector<std::size_t> rk(window + 2, 0);
  for (std::size_t i = 1; i <= window + 1; ++i) {
    const FreeMap& dmap = r.diff[i - 1];
    const std::size_t rows = r.betti[i] * n.n;
    const std::size_t cols = r.betti[i - 1] * n.n;
    if (rows == 0 || cols == 0) continue;
    if (rows * cols > budget.max_step_entries)
      throw Error(Err::ResourceLimit, "Ext differential above entry budget");
    if (elim_cost(rows, cols) > budget.max_elim_cost)
      throw Error(Err::ResourceLimit, "Ext elimination above cost budget");
    Mat delta(rows, cols);
    for (std::size_t t = 0; t < r.betti[i]; ++t)
      for (std::size_t j = 0; j < r.betti[i - 1]; ++j) {
        const Element& el = dmap.at(j, t);
        if (el.is_zero()) continue;
        const Mat act = element_action(n, el);
        for (std::size_t nr = 0; nr < n.n; ++nr)
          for (std::size_t nc = 0; nc < n.n; ++nc)
            if (act.at(nr, nc)) delta.at(t * n.n + nr, j * n.n + nc) = act.at(nr, nc);
      }
    rk[i] = rank(f, delta);
  }

  std::vector<std::size_t> dims(window + 1);
  for (std::size_t i = 0; i <= window; ++i) dims[i] = r.betti[i] * n.n - rk[i] - rk[i + 1];
  return dims;
}

std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t window,
                                  const ResolutionBudget& budget) {
  return ext_dims_from(minimal_resolution(m, window + 1, budget), n, window, budget);
}

std::vector<std::size_t> bar_ext_dims(const Module& m, const Module& n, std::size_t window,
                                      const BarBudget& budget) {
  if (m.alg != n.alg) throw Error(Err::MixedParents, "modules live over different algebras");
  const Algebra& a = *m.alg;
  const PrimeField& f = a.field();
  const std::size_t d = a.dim();
  const std::size_t r = d - 1;
  const std::size_t mm = m.n, nn = n.n;

  std::vector<std::uint32_t> rad;
  rad.reserve(r);
  std::vector<std::size_t> rad_of(d, 0);
  for (std::uint32_t b = 0; b < d; ++b)
    if (b != a.unit()) {
      rad_of[b] = rad.size();
      rad.push_back(b);
    }

  // powers r^0..r^{window+1} with overflow guard
  std::vector<std::size_t> pw(window + 2, 1);
  for (std::size_t i = 1; i < pw.size(); ++i) {
    if (r != 0 && pw[i - 1] > budget.max_entries / std::max<std::size_t>(r, 1))
      throw Error(Err::ResourceLimit, "bar complex too large");
    pw[i] = pw[i - 1] * r;
  }

  std::vector<std::size_t> rk(window + 2, 0);
  for (std::size_t k = 1; k <= window + 1; ++k) {
    const std::size_t rows = pw[k] * mm * nn;
    const std::size_t cols = pw[k - 1] * mm * nn;
    if (rows == 0 || cols == 0) continue;
    if (rows > budget.max_entries || cols > budget.max_entries ||
        rows * cols > budget.max_entries)
      throw Error(Err::ResourceLimit, "bar differential above entry budget");
    const std::uint64_t mn64 = std::min<std::uint64_t>(rows, cols);
    if (mn64 * mn64 * std::max<std::uint64_t>(rows, cols) > budget.max_elim_cost)
      throw Error(Err::ResourceLimit, "bar elimination above cost budget");

    Mat delta(rows, cols);
    std::vector<std::size_t> tau(k);
    for (std::size_t code = 0; code < pw[k]; ++code) {
      std::size_t rest = code;
      for (std::size_t pos = k; pos-- > 0;) {
        tau[pos] = rest % r;
        rest /= r;
      }
      const auto row_at = [&](std::size_t mp, std::size_t nr) {
        return (code * mm + mp) * nn + nr;
      };

      // leading term: the first tensor factor acts on N
      {
        const std::size_t col_code = code % pw[k - 1];
        const Mat& act = n.basis_actions[rad[tau[0]]];
        for (std::size_t mp = 0; mp < mm; ++mp)
          for (std::size_t nr = 0; nr < nn; ++nr)
            for (std::size_t nc = 0; nc < nn; ++nc)
              if (act.at(nr, nc)) {
                auto& cell = delta.at(row_at(mp, nr), (col_code * mm + mp) * nn + nc);
                cell = static_cast<std::uint32_t>(f.add(cell, act.at(nr, nc)));
              }
      }

      // interior contractions with alternating signs
      for (std::size_t i = 1; i < k; ++i) {
        const BasisProduct p = a.basis_product(rad[tau[i - 1]], rad[tau[i]]);
        if (p.is_zero()) continue;
        if (p.index == a.unit())
          throw Error(Err::Internal, "radical product left the radical");
        std::size_t col_code = 0;
        for (std::size_t pos = 0; pos < k; ++pos) {
          if (pos == i) continue;
          col_code = col_code * r + (pos == i - 1 ? rad_of[p.index] : tau[pos]);
        }
        const Scalar s = (i % 2) ? f.neg(p.coeff) : p.coeff;
        for (std::size_t mp = 0; mp < mm; ++mp)
          for (std::size_t nr = 0; nr < nn; ++nr) {
            auto& cell = delta.at(row_at(mp, nr), (col_code * mm + mp) * nn + nr);
            cell = static_cast<std::uint32_t>(f.add(cell, s));
          }
      }

      // trailing term: the last tensor factor acts on M
      {
        const std::size_t col_code = code / r;
        const Mat& act = m.basis_actions[rad[tau[k - 1]]];
        const bool odd = (k % 2) != 0;
        for (std::size_t mp = 0; mp < mm; ++mp)
          for (std::size_t mc = 0; mc < mm; ++mc) {
            const std::uint32_t v = act.at(mc, mp);
            if (!v) continue;
            const Scalar s = odd ? f.neg(v) : v;
            for (std::size_t nr = 0; nr < nn; ++nr) {
              auto& cell = delta.at(row_at(mp, nr), (col_code * mm + mc) * nn + nr);
              cell = static_cast<std::uint32_t>(f.add(cell, s));
            }
          }
      }
    }
    rk[k] = rank(f, delta);
  }

  std::vector<std::size_t> dims(window + 1);
  for (std::size_t i = 0; i <= window; ++i) dims[i] = pw[i] * mm * nn - rk[i] - rk[i + 1];
  return dims;
}

std::vector<std::size_t> hochschild_dims(const QciAlgebra& a, std::size_t window,
                                         const ResolutionBudget& budget) {
  EnvelopingData e = enveloping_algebra(a);
  return ext_dims(e.bimodule, e.bimodule, window, budget);
}

std::size_t center_dim(const QciAlgebra& a) {
  const Algebra& core = *a.core;
  const PrimeField& f = core.field();
  const std::size_t d = a.dim(), c = a.c();
  Mat sys(c * d, d);
  for (std::size_t g = 0; g < c; ++g) {
    const Mat l = core.gen_left_mult(g);
    Mat rmul(d, d);
    const std::uint32_t gb = core.gen_basis(g);
    for (std::uint32_t v = 0; v < d; ++v) {
      const BasisProduct p = core.basis_product(v, gb);
      if (!p.is_zero()) rmul.at(p.index, v) = static_cast<std::uint32_t>(p.coeff);
    }
    for (std::size_t rr = 0; rr < d; ++rr)
      for (std::size_t cc = 0; cc < d; ++cc)
        sys.at(g * d + rr, cc) = static_cast<std::uint32_t>(f.sub(l.at(rr, cc), rmul.at(rr, cc)));
  }
  return nullity(f, sys);
}

bool kunneth_convolution_matches(const std::vector<std::size_t>& em,
                                 const std::vector<std::size_t>& en,
                                 const std::vector<std::size_t>& et) {
  if (em.size() < et.size() || en.size() < et.size())
    throw Error(Err::BadParams, "factor tables shorter than the product table");
  for (std::size_t i = 0; i < et.size(); ++i) {
    std::size_t sum = 0;
    for (std::size_t u = 0; u <= i; ++u) sum += em[u] * en[i - u];
    if (sum != et[i]) return false;
  }
  return true;
}

SymmetryReport ext_symmetry_check(const std::vector<std::size_t>& mn,
                                  const std::vector<std::size_t>& nm) {
  if (mn.size() != nm.size() || mn.size() < 2)
    throw Error(Err::BadParams, "need matching dim tables over a positive window");
  const std::size_t w = mn.size() - 1;
  const auto vanish = [](const std::vector<std::size_t>& v, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i <= hi; ++i)
      if (v[i]) return false;
    return true;
  };
  SymmetryReport rep;
  rep.mn_vanishes = vanish(mn, 1, w);
  rep.nm_vanishes = vanish(nm, 1, w);
  const std::size_t lo = (w + 1) / 2;
  rep.mn_tail_vanishes = vanish(mn, lo, w);
  rep.nm_tail_vanishes = vanish(nm, lo, w);
  if (rep.mn_vanishes == rep.nm_vanishes)
    rep.verdict = rep.mn_vanishes ? SymmetryVerdict::SymmetricVanishing
                                  : SymmetryVerdict::SymmetricNonvanishing;
  else
    rep.verdict = SymmetryVerdict::Violation;
  return rep;
}

const char* symmetry_verdict_name(SymmetryVerdict v) {
  switch (v) {
    case SymmetryVerdict::SymmetricVanishing: return "symmetric-vanishing";
    case SymmetryVerdict::SymmetricNonvanishing: return "symmetric-nonvanishing";
    case SymmetryVerdict::Violation: return "violation";
  }
  return "unknown";
}

}  // namespace qci
