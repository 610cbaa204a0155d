#include "campaign.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace qci {

namespace {

const char* kCampaigns[] = {"nakayama", "double", "decompose", "kunneth", "ext-symmetry",
                            "hochschild"};

bool known_campaign(const std::string& name) {
  return std::find(std::begin(kCampaigns), std::end(kCampaigns), name) != std::end(kCampaigns);
}

void validate_spec(const ExperimentSpec& s) {
  if (!known_campaign(s.campaign)) throw Error(Err::ParseError, "unknown campaign: " + s.campaign);
  if (s.window < 1) throw Error(Err::BadParams, "window must be at least 1");
  if (s.corpus < 1) throw Error(Err::BadParams, "corpus size must be at least 1");
  if (s.budget_dim < 2) throw Error(Err::BadParams, "dimension budget must be at least 2");
}

// Runs one case body; a resource-limit abort becomes a skipped record so the
// rest of the campaign still runs. Fields set before the abort stay in the
// record, which keeps skipped cases replayable.
void guarded_case(std::vector<Json>& cases, const std::function<void(Json&)>& body) {
  Json rec;
  rec["case"] = cases.size();
  try {
    body(rec);
  } catch (const Error& e) {
    if (e.code() != Err::ResourceLimit) throw;
    rec["skipped"] = true;
    rec["error"] = e.what();
  }
  cases.push_back(std::move(rec));
}

std::uint64_t pick_prime(std::mt19937_64& rng) { return rng() % 2 == 0 ? 5 : 13; }

// Corpus for algebra-level campaigns: the inline algebra when given, else
// `count` sampled ones alternating over F_5 and F_13.
std::vector<QciAlgebra> corpus_algebras(const ExperimentSpec& spec, std::mt19937_64& rng,
                                        std::size_t count, std::size_t max_dim,
                                        std::size_t min_c) {
  std::vector<QciAlgebra> out;
  if (spec.algebra.has_value()) {
    out.push_back(algebra_from_json(*spec.algebra));
    return out;
  }
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_qci(rng, pick_prime(rng), max_dim, min_c));
  return out;
}

void run_nakayama(const ExperimentSpec& spec, std::mt19937_64& rng, std::vector<Json>& cases) {
  auto algebras = corpus_algebras(spec, rng, spec.corpus, spec.budget_dim, 1);
  for (const QciAlgebra& A : algebras) {
    guarded_case(cases, [&](Json& rec) {
      rec["algebra"] = algebra_to_json(A);
      rec["provenance"] = provenance_json(A);
      NakayamaInfo info = nakayama(A);
      bool holds = nakayama_identity_holds(A);
      rec["gamma"] = info.gamma;
      rec["symmetric"] = info.symmetric;
      rec["identity_holds"] = holds;
      rec["pass"] = holds;
    });
  }
}

void run_double(const ExperimentSpec& spec, std::mt19937_64& rng, std::vector<Json>& cases) {
  auto algebras = corpus_algebras(spec, rng, spec.corpus, spec.budget_dim, 1);
  for (const QciAlgebra& A : algebras) {
    guarded_case(cases, [&](Json& rec) {
      rec["algebra"] = algebra_to_json(A);
      rec["provenance"] = provenance_json(A);
      QciAlgebra D = symmetric_double(A);
      rec["double"] = algebra_to_json(D);
      bool sym = is_symmetric(D);

      std::vector<std::size_t> firstBlock(A.c());
      for (std::size_t i = 0; i < A.c(); ++i) firstBlock[i] = i;
      QciAlgebra S = subalgebra_on(D, firstBlock);
      bool sub = S.a == A.a && S.q == A.q;
      for (std::uint32_t u = 0; u < A.dim() && sub; ++u)
        for (std::uint32_t v = 0; v < A.dim() && sub; ++v)
          sub = S.core->basis_product(u, v) == A.core->basis_product(u, v);

      // Commutator bookkeeping. As value sets the double introduces nothing
      // new; off the diagonal each value of q shows up once per block of
      // q' = [[q, qT], [qT, q]], so its multiplicity scales by 4, and the
      // diagonal of the two transpose blocks adds 2c unit commutators.
      std::map<Scalar, std::size_t> offA, offD;
      for (std::size_t i = 0; i < A.c(); ++i)
        for (std::size_t j = 0; j < A.c(); ++j)
          if (i != j) ++offA[A.q[i][j]];
      for (std::size_t i = 0; i < D.c(); ++i)
        for (std::size_t j = 0; j < D.c(); ++j)
          if (i != j) ++offD[D.q[i][j]];
      bool sets_equal = true;
      for (const auto& row : D.q)
        for (Scalar v : row)
          if (v != 1 && offA.find(v) == offA.end()) sets_equal = false;
      bool law = true;
      for (const auto& [v, n] : offD) {
        std::size_t expect = 4 * (offA.count(v) ? offA.at(v) : 0) + (v == 1 ? 2 * A.c() : 0);
        if (n != expect) law = false;
      }
      for (const auto& [v, n] : offA)
        if (offD.find(v) == offD.end()) law = false;

      rec["double_symmetric"] = sym;
      rec["subalgebra_matches"] = sub;
      rec["commutator_sets_equal"] = sets_equal;
      rec["offdiag_multiplicity_law"] = law;
      rec["pass"] = sym && sub && sets_equal && law;
    });
  }
}

void run_decompose(const ExperimentSpec& spec, std::mt19937_64& rng, std::vector<Json>& cases) {
  auto algebras = corpus_algebras(spec, rng, spec.corpus, spec.budget_dim, 2);
  for (const QciAlgebra& A : algebras) {
    if (A.c() < 2) continue;  // an inline single-variable algebra has no proper splits
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << A.c()); ++mask) {
      std::vector<std::size_t> I;
      for (std::size_t i = 0; i < A.c(); ++i)
        if (mask & (std::size_t{1} << i)) I.push_back(i);
      guarded_case(cases, [&](Json& rec) {
        rec["algebra"] = algebra_to_json(A);
        rec["provenance"] = provenance_json(A);
        rec["split"] = I;
        bool match = decomposition_matches(A, I);
        rec["match"] = match;
        rec["pass"] = match;
      });
    }
  }
}

void run_kunneth(const ExperimentSpec& spec, std::mt19937_64& rng, std::vector<Json>& cases) {
  if (spec.algebra.has_value())
    throw Error(Err::BadParams, "the kunneth campaign samples its factor algebras");
  std::size_t factor_cap = std::min<std::size_t>(spec.budget_dim, 4);
  for (std::size_t n = 0; n < spec.corpus; ++n) {
    std::uint64_t p = pick_prime(rng);
    QciAlgebra L = random_qci(rng, p, factor_cap);
    QciAlgebra R = random_qci(rng, p, factor_cap);
    TwistMap t;
    t.c1 = L.c();
    t.c2 = R.c();
    t.t.assign(t.c1, std::vector<Scalar>(t.c2, 1));
    for (auto& row : t.t)
      for (Scalar& v : row) v = 1 + rng() % (p - 1);

    RandomModuleParams mp;
    mp.max_dim = L.c() + R.c() >= 3 ? 2 : 3;
    Module m1 = random_module(rng, L.core, mp);
    Module m2 = random_module(rng, L.core, mp);
    Module n1 = random_module(rng, R.core, mp);
    Module n2 = random_module(rng, R.core, mp);

    guarded_case(cases, [&](Json& rec) {
      rec["left"] = algebra_to_json(L);
      rec["right"] = algebra_to_json(R);
      rec["twist"] = twist_to_json(t);
      rec["m1"] = module_to_json(m1);
      rec["m2"] = module_to_json(m2);
      rec["n1"] = module_to_json(n1);
      rec["n2"] = module_to_json(n2);
      Json prov;
      prov["left"] = provenance_json(L);
      prov["right"] = provenance_json(R);
      prov["graded"] = true;
      rec["provenance"] = prov;

      TwistedAlgebra T = twisted_product(L.core, R.core, t);
      Module pm = twisted_tensor_module(T, m1, n1);
      Module pn = twisted_tensor_module(T, m2, n2);
      auto em = ext_dims(m1, m2, spec.window);
      auto en = ext_dims(n1, n2, spec.window);
      auto et = ext_dims(pm, pn, spec.window);
      rec["ext_left"] = ext_table_json(em);
      rec["ext_right"] = ext_table_json(en);
      rec["ext_product"] = ext_table_json(et);
      bool match = kunneth_convolution_matches(em, en, et);
      rec["match"] = match;
      rec["pass"] = match;
    });
  }
}

void run_ext_symmetry(const ExperimentSpec& spec, std::mt19937_64& rng, std::vector<Json>& cases) {
  struct Group {
    QciAlgebra A;
    std::size_t pairs;
  };
  std::vector<Group> groups;
  if (spec.algebra.has_value()) {
    groups.push_back({algebra_from_json(*spec.algebra), spec.corpus});
  } else {
    std::size_t cap = std::min<std::size_t>(spec.budget_dim, 9);
    std::size_t left = spec.corpus;
    while (left > 0) {
      std::size_t chunk = std::min<std::size_t>(left, 64);
      groups.push_back({random_qci(rng, pick_prime(rng), cap), chunk});
      left -= chunk;
    }
  }

  for (const Group& g : groups) {
    const QciAlgebra& A = g.A;
    bool symmetric = is_symmetric(A);
    std::size_t pool = 2;
    while (pool * pool < g.pairs) ++pool;

    RandomModuleParams mp;
    mp.max_dim = A.dim() <= 4 ? 4 : (A.dim() <= 9 ? 3 : 2);
    std::vector<Module> mods;
    mods.reserve(pool);
    for (std::size_t i = 0; i < pool; ++i) {
      // Theorem hypotheses: arbitrary modules when the algebra is symmetric,
      // graded ones otherwise.
      mp.graded = symmetric ? (i % 2 == 0) : true;
      mods.push_back(random_module(rng, A.core, mp));
    }

    // Resolve each pool member once and share it across its pairs.
    std::vector<std::optional<Resolution>> res(pool);
    std::vector<bool> bad(pool, false);
    auto resolve = [&](std::size_t i) {
      if (!res[i].has_value() && !bad[i]) {
        try {
          res[i] = minimal_resolution(mods[i], spec.window + 1);
        } catch (const Error& e) {
          if (e.code() != Err::ResourceLimit) throw;
          bad[i] = true;
        }
      }
      if (bad[i]) throw Error(Err::ResourceLimit, "resolution budget exceeded for pool module");
    };

    std::size_t emitted = 0;
    for (std::size_t i = 0; i < pool && emitted < g.pairs; ++i)
      for (std::size_t j = 0; j < pool && emitted < g.pairs; ++j) {
        guarded_case(cases, [&](Json& rec) {
          rec["algebra"] = algebra_to_json(A);
          rec["provenance"] = provenance_json(A);
          rec["module_m"] = module_to_json(mods[i]);
          rec["module_n"] = module_to_json(mods[j]);
          rec["graded"] = mods[i].graded() && mods[j].graded();
          resolve(i);
          resolve(j);
          auto mn = ext_dims_from(*res[i], mods[j], spec.window);
          auto nm = ext_dims_from(*res[j], mods[i], spec.window);
          rec["ext_mn"] = ext_table_json(mn);
          rec["ext_nm"] = ext_table_json(nm);
          SymmetryReport rep = ext_symmetry_check(mn, nm);
          bool tail_ok = (!rep.mn_tail_vanishes || rep.mn_vanishes) &&
                         (!rep.nm_tail_vanishes || rep.nm_vanishes);
          rec["verdict"] = symmetry_verdict_name(rep.verdict);
          rec["tail_consistent"] = tail_ok;
          rec["pass"] = rep.verdict != SymmetryVerdict::Violation && tail_ok;
        });
        ++emitted;
      }
  }
}

void run_hochschild(const ExperimentSpec& spec, std::mt19937_64& rng, std::vector<Json>& cases) {
  auto algebras =
      corpus_algebras(spec, rng, spec.corpus, std::min<std::size_t>(spec.budget_dim, 6), 1);
  for (const QciAlgebra& A : algebras) {
    guarded_case(cases, [&](Json& rec) {
      rec["algebra"] = algebra_to_json(A);
      rec["provenance"] = provenance_json(A);
      auto hh = hochschild_dims(A, spec.window);
      std::size_t z = center_dim(A);
      rec["hh"] = ext_table_json(hh);
      rec["center_dim"] = z;
      bool ok = hh[0] == z;
      rec["hh0_matches_center"] = ok;
      rec["pass"] = ok;
    });
  }
}

}  // namespace

ExperimentSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Err::ParseError, "spec must be a JSON object");
  ExperimentSpec s;
  if (!j.contains("campaign") || !j.at("campaign").is_string())
    throw Error(Err::ParseError, "spec needs a campaign name");
  s.campaign = j.at("campaign").get<std::string>();
  if (j.contains("algebra") && !j.at("algebra").is_null()) s.algebra = j.at("algebra");
  auto read_size = [&](const char* key, std::size_t fallback) -> std::size_t {
    if (!j.contains(key)) return fallback;
    const Json& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw Error(Err::ParseError, std::string("spec key must be a nonnegative integer: ") + key);
    return v.get<std::size_t>();
  };
  s.window = read_size("window", s.window);
  s.corpus = read_size("corpus", s.corpus);
  s.seed = read_size("seed", 0);
  s.budget_dim = read_size("budget_dim", s.budget_dim);
  validate_spec(s);
  return s;
}

Json spec_to_json(const ExperimentSpec& s) {
  Json j;
  j["campaign"] = s.campaign;
  j["algebra"] = s.algebra.has_value() ? *s.algebra : Json(nullptr);
  j["window"] = s.window;
  j["corpus"] = s.corpus;
  j["seed"] = s.seed;
  j["budget_dim"] = s.budget_dim;
  return j;
}

CampaignResult run_campaign(const ExperimentSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  std::vector<Json> cases;

  if (spec.campaign == "nakayama") run_nakayama(spec, rng, cases);
  else if (spec.campaign == "double") run_double(spec, rng, cases);
  else if (spec.campaign == "decompose") run_decompose(spec, rng, cases);
  else if (spec.campaign == "kunneth") run_kunneth(spec, rng, cases);
  else if (spec.campaign == "ext-symmetry") run_ext_symmetry(spec, rng, cases);
  else run_hochschild(spec, rng, cases);

  CampaignResult out;
  out.cases = cases.size();
  for (const Json& rec : cases) {
    if (rec.contains("skipped")) ++out.skipped;
    else if (!rec.at("pass").get<bool>()) ++out.violations;
  }
  out.pass = out.violations == 0;

  std::string body;
  Json echo;
  echo["spec"] = spec_to_json(spec);
  body += echo.dump();
  body += '\n';
  for (const Json& rec : cases) {
    body += rec.dump();
    body += '\n';
  }
  Json summary;
  summary["campaign"] = spec.campaign;
  summary["cases"] = out.cases;
  summary["violations"] = out.violations;
  summary["skipped"] = out.skipped;
  summary["verdict"] = out.pass ? "PASS" : "FAIL";
  summary["provenance"] =
      spec.algebra.has_value() ? provenance_json(algebra_from_json(*spec.algebra)) : Json(nullptr);
  Json last;
  last["summary"] = std::move(summary);
  body += last.dump();
  body += '\n';
  out.report = std::move(body);
  return out;
}

QciAlgebra random_qci(std::mt19937_64& rng, std::uint64_t p, std::size_t max_dim,
                      std::size_t min_c) {
  if (min_c < 1 || max_dim < (std::size_t{1} << min_c))
    throw Error(Err::BadParams, "dimension budget cannot fit the requested generator count");
  std::size_t cmax = 1;
  while (cmax < 4 && (std::size_t{1} << (cmax + 1)) <= max_dim) ++cmax;
  cmax = std::max(cmax, min_c);
  std::size_t c = min_c + rng() % (cmax - min_c + 1);

  // Greedy exponent choice that reserves room (one factor of 2 per remaining
  // slot) so the product never exceeds the budget.
  std::vector<std::uint32_t> a(c);
  std::size_t prod = 1;
  for (std::size_t i = 0; i < c; ++i) {
    std::size_t reserve = std::size_t{1} << (c - 1 - i);
    std::size_t limit = std::min<std::size_t>(4, max_dim / (prod * reserve));
    a[i] = static_cast<std::uint32_t>(2 + rng() % (limit - 1));
    prod *= a[i];
  }

  const PrimeField f(p);
  std::vector<std::vector<Scalar>> q(c, std::vector<Scalar>(c, 1));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) {
      q[i][j] = 1 + rng() % (p - 1);
      q[j][i] = f.inv(q[i][j]);
    }
  return make_qci(p, std::move(a), std::move(q));
}

bool nakayama_identity_holds(const QciAlgebra& A) {
  const PrimeField& f = A.core->field();
  FrobeniusForm form = frobenius_form(A);
  NakayamaInfo info = nakayama(A);
  for (std::uint32_t u = 0; u < A.dim(); ++u)
    for (std::uint32_t v = 0; v < A.dim(); ++v) {
      Scalar lhs = form.pair(A, u, v);
      Scalar rhs = f.mul(nakayama_scalar(A, info.gamma, A.exps[v]), form.pair(A, v, u));
      if (lhs != rhs) return false;
    }
  return true;
}

Json provenance_json(const QciAlgebra& A) {
  const PrimeField& f = A.core->field();
  Json j;
  j["p"] = A.p;
  Json orders = Json::array();
  bool all_finite = true;
  for (std::size_t i = 0; i < A.c(); ++i)
    for (std::size_t k = i + 1; k < A.c(); ++k) {
      std::uint64_t ord = multiplicative_order(f, A.q[i][k]);
      all_finite = all_finite && ord >= 1;
      orders.push_back(ord);
    }
  j["q_orders"] = orders;
  j["symmetric"] = is_symmetric(A);
  j["roots_of_unity"] = all_finite;
  return j;
}

}  // namespace qci
