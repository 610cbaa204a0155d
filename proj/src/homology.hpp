#pragma once

#include <cstdint>
#include <vector>

#include "module.hpp"

namespace qci {

struct ResolutionBudget {
  std::size_t max_rank = 512;
  std::size_t max_step_entries = std::size_t{1} << 26;
  // Cap on min(rows, cols)^2 * max(rows, cols) per elimination, so oversized
  // inputs abort quickly instead of grinding.
  std::uint64_t max_elim_cost = 10'000'000'000ULL;
};

// Matrix of algebra elements; column t lists the coefficients of the image of
// the t-th source generator over the target generators.
struct FreeMap {
  std::size_t rows = 0, cols = 0;
  std::vector<Element> e;

  Element& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
};

// Minimal free resolution P_window -> ... -> P_1 -> P_0 of a module. diff[s]
// is P_{s+1} -> P_s; every differential entry lies in the radical, composites
// vanish, and each step's surjectivity is verified during construction.
struct Resolution {
  Algebra::Ptr alg;
  std::vector<std::size_t> betti;
  std::vector<FreeMap> diff;
  std::vector<std::vector<Degree>> gen_degrees;  // one list per step when the module is graded
};

Resolution minimal_resolution(const Module& m, std::size_t window,
                              const ResolutionBudget& budget = {});

// dim Ext^i(M, N) for i = 0..window; r must resolve M to window + 1 steps.
std::vector<std::size_t> ext_dims_from(const Resolution& r, const Module& n, std::size_t window,
                                       const ResolutionBudget& budget = {});
std::vector<std::size_t> ext_dims(const Module& m, const Module& n, std::size_t window,
                                  const ResolutionBudget& budget = {});

struct BarBudget {
  std::size_t max_entries = std::size_t{1} << 25;
  std::uint64_t max_elim_cost = 4'000'000'000ULL;
};

// The same dimensions from the normalized bar resolution (tensor powers of
// the radical); shares no code with the minimal-resolution path.
std::vector<std::size_t> bar_ext_dims(const Module& m, const Module& n, std::size_t window,
                                      const BarBudget& budget = {});

// dim Ext^i over the enveloping algebra of the diagonal bimodule against
// itself, i = 0..window.
std::vector<std::size_t> hochschild_dims(const QciAlgebra& a, std::size_t window,
                                         const ResolutionBudget& budget = {});

std::size_t center_dim(const QciAlgebra& a);

// et[i] == sum_{u+v=i} em[u] en[v] for every i < et.size().
bool kunneth_convolution_matches(const std::vector<std::size_t>& em,
                                 const std::vector<std::size_t>& en,
                                 const std::vector<std::size_t>& et);

enum class SymmetryVerdict { SymmetricVanishing, SymmetricNonvanishing, Violation };

struct SymmetryReport {
  SymmetryVerdict verdict = SymmetryVerdict::SymmetricNonvanishing;
  bool mn_vanishes = false;       // Ext^i(M,N) = 0 for all i in [1, w]
  bool nm_vanishes = false;
  bool mn_tail_vanishes = false;  // the same over [ceil(w/2), w]
  bool nm_tail_vanishes = false;
};

// Compares vanishing in the two directions; inputs are dim tables for
// i = 0..w of the same length.
SymmetryReport ext_symmetry_check(const std::vector<std::size_t>& mn,
                                  const std::vector<std::size_t>& nm);

const char* symmetry_verdict_name(SymmetryVerdict v);

}  // namespace qci
