#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "field.hpp"

namespace qci {

using Vec = std::vector<std::uint32_t>;

// Dense row-major matrix over F_p. Entries are reduced residues; the field is
// passed to the operations rather than stored per matrix.
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  std::uint32_t* row(std::size_t r) { return a.data() + r * cols; }
  const std::uint32_t* row(std::size_t r) const { return a.data() + r * cols; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  static Mat identity(std::size_t n);
  bool is_zero() const;
};

Mat mat_mul(const PrimeField& f, const Mat& x, const Mat& y);
Mat mat_add(const PrimeField& f, const Mat& x, const Mat& y);
Mat mat_scale(const PrimeField& f, Scalar c, const Mat& x);
Mat mat_transpose(const Mat& x);
Vec mat_apply(const PrimeField& f, const Mat& x, const Vec& v);

// Forward elimination in place; deterministic first-nonzero pivoting in column
// order. Returns the rank.
std::size_t echelon_in_place(const PrimeField& f, Mat& m);

std::size_t rank(const PrimeField& f, Mat m);

// Reduced row echelon form in place; returns pivot columns in increasing
// order. Row i of the result is the row with the i-th pivot.
std::vector<std::size_t> rref_in_place(const PrimeField& f, Mat& m);

// Columns form a basis of { v : m v = 0 }.
Mat kernel_basis(const PrimeField& f, const Mat& m);

std::size_t nullity(const PrimeField& f, const Mat& m);

// One solution of m x = b with free coordinates set to zero; throws
// Err::Inconsistent if none exists.
Vec solve(const PrimeField& f, Mat m, const Vec& b);

// A growing subspace of F_p^n kept in reduced echelon form. Insertion order is
// deterministic, so pivot choices (and hence quotient bases built from the
// non-pivot coordinates) are reproducible.
class EchelonSpace {
public:
  EchelonSpace(const PrimeField& f, std::size_t ambient) : f_(&f), n_(ambient) {}

  // Returns true when v was independent of the current space.
  bool insert(Vec v);

  // Reduce v modulo the space; afterwards v has zeros in all pivot rows.
  void reduce(Vec& v) const;

  bool contains(Vec v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> nonpivot_rows() const;
  const std::vector<Vec>& basis() const { return rows_; }

private:
  const PrimeField* f_;
  std::size_t n_;
  std::vector<Vec> rows_;            // ordered by pivot row
  std::vector<std::size_t> pivots_;  // increasing
};

}  // namespace qci
