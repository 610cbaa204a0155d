#include "linalg.hpp"

#include <algorithm>

namespace qci {

namespace {

// dst += c * src (mod p), starting at offset `from`.
void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t from, std::size_t n,
          std::uint64_t c, std::uint64_t p) {
  for (std::size_t i = from; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + c * src[i]) % p);
}

void scale_row(std::uint32_t* r, std::size_t from, std::size_t n, std::uint64_t c, std::uint64_t p) {
  for (std::size_t i = from; i < n; ++i)
    r[i] = static_cast<std::uint32_t>((c * r[i]) % p);
}

}  // namespace

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x == 0; });
}

Mat mat_mul(const PrimeField& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw Error(Err::BadParams, "matrix product shape mismatch");
  Mat r(x.rows, y.cols);
  const std::uint64_t p = f.p();
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      const std::uint64_t c = x.at(i, k);
      if (c == 0) continue;
      axpy(r.row(i), y.row(k), 0, y.cols, c, p);
    }
  }
  return r;
}

Mat mat_add(const PrimeField& f, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw Error(Err::BadParams, "matrix sum shape mismatch");
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    r.a[i] = static_cast<std::uint32_t>(f.add(x.a[i], y.a[i]));
  return r;
}

Mat mat_scale(const PrimeField& f, Scalar c, const Mat& x) {
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i)
    r.a[i] = static_cast<std::uint32_t>(f.mul(c, x.a[i]));
  return r;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Vec mat_apply(const PrimeField& f, const Mat& x, const Vec& v) {
  if (x.cols != v.size()) throw Error(Err::BadParams, "matrix apply shape mismatch");
  Vec r(x.rows, 0);
  const std::uint64_t p = f.p();
  for (std::size_t i = 0; i < x.rows; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = x.row(i);
    for (std::size_t j = 0; j < x.cols; ++j) acc = (acc + std::uint64_t{row[j]} * v[j]) % p;
    r[i] = static_cast<std::uint32_t>(acc);
  }
  return r;
}

std::size_t echelon_in_place(const PrimeField& f, Mat& m) {
  const std::uint64_t p = f.p();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      std::swap_ranges(m.row(piv) + col, m.row(piv) + m.cols, m.row(r) + col);
    const std::uint64_t inv = f.inv(m.at(r, col));
    scale_row(m.row(r), col, m.cols, inv, p);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const std::uint64_t c = m.at(i, col);
      if (c == 0) continue;
      axpy(m.row(i), m.row(r), col, m.cols, p - c, p);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const PrimeField& f, Mat m) { return echelon_in_place(f, m); }

std::vector<std::size_t> rref_in_place(const PrimeField& f, Mat& m) {
  const std::uint64_t p = f.p();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      std::swap_ranges(m.row(piv) + col, m.row(piv) + m.cols, m.row(r) + col);
    const std::uint64_t inv = f.inv(m.at(r, col));
    scale_row(m.row(r), col, m.cols, inv, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const std::uint64_t c = m.at(i, col);
      if (c == 0) continue;
      axpy(m.row(i), m.row(r), col, m.cols, p - c, p);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

Mat kernel_basis(const PrimeField& f, const Mat& m) {
  Mat r = m;
  const std::vector<std::size_t> pivots = rref_in_place(f, r);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  const std::size_t nfree = m.cols - pivots.size();
  Mat k(m.cols, nfree);
  std::size_t idx = 0;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    k.at(fc, idx) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      k.at(pivots[pi], idx) = static_cast<std::uint32_t>(f.neg(r.at(pi, fc)));
    ++idx;
  }
  return k;
}

std::size_t nullity(const PrimeField& f, const Mat& m) { return m.cols - rank(f, m); }

Vec solve(const PrimeField& f, Mat m, const Vec& b) {
  if (b.size() != m.rows) throw Error(Err::BadParams, "solve: rhs length mismatch");
  Mat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::copy(m.row(i), m.row(i) + m.cols, aug.row(i));
    aug.at(i, m.cols) = b[i];
  }
  const std::vector<std::size_t> pivots = rref_in_place(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols)
    throw Error(Err::Inconsistent, "linear system has no solution");
  Vec x(m.cols, 0);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, m.cols);
  return x;
}

bool EchelonSpace::insert(Vec v) {
  if (v.size() != n_) throw Error(Err::BadParams, "echelon insert: wrong ambient dimension");
  reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && v[piv] == 0) ++piv;
  if (piv == n_) return false;
  const std::uint64_t p = f_->p();
  scale_row(v.data(), piv, n_, f_->inv(v[piv]), p);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t c = rows_[i][piv];
    if (c) axpy(rows_[i].data(), v.data(), piv, n_, p - c, p);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

void EchelonSpace::reduce(Vec& v) const {
  const std::uint64_t p = f_->p();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint64_t c = v[pivots_[i]];
    if (c) axpy(v.data(), rows_[i].data(), pivots_[i], n_, p - c, p);
  }
}

bool EchelonSpace::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::size_t> EchelonSpace::nonpivot_rows() const {
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t r : pivots_) is_pivot[r] = true;
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < n_; ++r)
    if (!is_pivot[r]) out.push_back(r);
  return out;
}

}  // namespace qci
