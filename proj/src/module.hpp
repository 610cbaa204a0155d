#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"
#include "twist.hpp"

namespace qci {

// Finite-dimensional left module given by one action matrix per algebra
// generator (acting on column vectors). Construction goes through
// make_module, which checks the generator relations and, when degrees are
// present, homogeneity; actions of all basis elements are then built from the
// generator actions along the algebra's decomposition chains.
struct Module {
  Algebra::Ptr alg;
  std::size_t n = 0;
  std::vector<Mat> gen_actions;
  std::vector<Mat> basis_actions;
  std::optional<std::vector<Degree>> degrees;

  bool graded() const { return degrees.has_value(); }
  std::size_t dim() const { return n; }
};

Module make_module(Algebra::Ptr alg, std::vector<Mat> gen_actions,
                   std::optional<std::vector<Degree>> degrees);

// Action of an arbitrary element.
Mat element_action(const Module& m, const Element& x);

Module trivial_module(Algebra::Ptr alg);

// A^r with an optional degree shift per free generator.
Module free_module(Algebra::Ptr alg, std::size_t r, std::vector<Degree> shifts = {});

// Inserts the vectors and closes the space under the generator actions.
void close_under_actions(const PrimeField& f, EchelonSpace& space, const std::vector<Mat>& actions,
                         std::vector<Vec> seeds);

// Quotient of free_module(alg, shifts.size(), shifts) by the submodule
// generated by the given coordinate vectors. With graded = true every
// relation must be homogeneous and the quotient keeps its degrees.
Module module_from_presentation(Algebra::Ptr alg, const std::vector<Degree>& shifts,
                                const std::vector<Vec>& relations, bool graded = true);

// k-linear dual as a module over the opposite algebra: transposed actions,
// negated degrees.
Module dualize(const Module& m, Algebra::Ptr opposite_core);

Module direct_sum(const Module& x, const Module& y);

// M (x) N over the twisted product of their algebras:
// (g (x) 1) acts as rho_M(g) (x) id, and (1 (x) h) acts on the block of the
// i-th M-basis vector as t(deg m_i, deg h) rho_N(h). Needs graded factors.
Module twisted_tensor_module(const TwistedAlgebra& t, const Module& m, const Module& n);

// A (x) A^op with the trivial twist, together with A as a left module over it
// (left block acts by left multiplication, right block by right
// multiplication). The bimodule is not graded.
struct EnvelopingData {
  TwistedAlgebra env;
  Module bimodule;
};

EnvelopingData enveloping_algebra(const QciAlgebra& a);

// dim_k Hom_alg(m, n) via the intertwiner equations F rho_M(g) = rho_N(g) F.
std::size_t hom_dim(const Module& m, const Module& n);

struct RandomModuleParams {
  std::size_t max_free_rank = 2;
  std::size_t max_relations = 3;
  std::size_t max_dim = 8;
  bool graded = true;
  std::size_t attempts = 50;
};

// Deterministic given the generator state: quotient of a shifted free module
// by a random (homogeneous when graded) submodule. Falls back to the trivial
// module if no attempt hits a dimension in (0, max_dim].
Module random_module(std::mt19937_64& rng, Algebra::Ptr alg, const RandomModuleParams& params);

}  // namespace qci
