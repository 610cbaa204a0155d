#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "homology.hpp"
#include "json_io.hpp"

namespace qci {

// A verification run: which property family to exercise, over which algebra
// (inline JSON) or a sampled corpus when absent, with window, corpus size,
// seed, and a dimension budget for sampled algebras.
struct ExperimentSpec {
  std::string campaign;  // nakayama | double | decompose | kunneth | ext-symmetry | hochschild
  std::optional<Json> algebra;
  std::size_t window = 10;
  std::size_t corpus = 1;
  std::uint64_t seed = 0;
  std::size_t budget_dim = 64;
};

ExperimentSpec spec_from_json(const Json& j);
Json spec_to_json(const ExperimentSpec& s);

// Report body is JSON lines: a spec echo, one record per case in index
// order, then a summary object. Same spec and seed always reproduce the
// same bytes; cases that exceed resource budgets are recorded as skipped
// rather than failing the run.
struct CampaignResult {
  std::string report;
  bool pass = false;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
};

CampaignResult run_campaign(const ExperimentSpec& spec);

// Random QCI with dim <= max_dim and at least min_c generators; exponents
// range over [2,4], commutators over the nonzero residues.
QciAlgebra random_qci(std::mt19937_64& rng, std::uint64_t p, std::size_t max_dim,
                      std::size_t min_c = 1);

// Computed hypothesis flags stamped into reports: the prime, the
// multiplicative orders of the commutators q_ij (i < j), and whether the
// Nakayama automorphism is trivial. Over a prime field every nonzero
// commutator has finite order, so the root-of-unity flag records that fact
// once computed rather than taking it on faith.
Json provenance_json(const QciAlgebra& A);

// Checks phi(1)(y x) = phi(1)(nu(x) y) over all basis pairs, with nu given
// by the closed-formula Nakayama scalars.
bool nakayama_identity_holds(const QciAlgebra& A);

}  // namespace qci
