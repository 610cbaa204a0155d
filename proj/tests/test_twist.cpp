#include <random>
#include <vector>

#include "doctest.h"
#include "twist.hpp"

using namespace qci;

namespace {

Element random_element(std::mt19937_64& rng, Algebra::Ptr a) {
  Element e = element_zero(a);
  for (auto& c : e.c)
    if (rng() % 3 == 0) c = rng() % a->field().p();
  return e;
}

}  // namespace

TEST_CASE("split validation") {
  auto [l, r] = split_generators(3, {2, 0});
  CHECK(l == std::vector<std::size_t>{0, 2});
  CHECK(r == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(split_generators(3, {}), Error);
  CHECK_THROWS_AS(split_generators(3, {0, 1, 2}), Error);
  CHECK_THROWS_AS(split_generators(3, {1, 1}), Error);
  CHECK_THROWS_AS(split_generators(3, {5}), Error);
  try {
    split_generators(2, {0, 1});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::BadSplit);
  }
}

TEST_CASE("trivial twist gives the plain graded tensor product") {
  QciAlgebra X = truncated_polynomial(5, 1, 2);
  QciAlgebra Y = truncated_polynomial(5, 1, 3);
  TwistedAlgebra T = twisted_product(X.core, Y.core, trivial_twist(1, 1));
  CHECK(T.dim() == 6);

  QciAlgebra P = make_qci(5, {2, 3}, {{1, 1}, {1, 1}});
  for (std::uint32_t u = 0; u < 6; ++u)
    for (std::uint32_t v = 0; v < 6; ++v)
      CHECK(T.core->basis_product(u, v) == P.core->basis_product(u, v));
  CHECK(T.core->grading_rank() == 2);
  CHECK(T.core->gen_count() == 2);
}

TEST_CASE("sign twist of two lines is the exterior algebra on two generators") {
  QciAlgebra X = truncated_polynomial(5, 1, 2);
  QciAlgebra Y = truncated_polynomial(5, 1, 2);
  TwistMap t{1, 1, {{4}}};
  TwistedAlgebra T = twisted_product(X.core, Y.core, t);
  QciAlgebra E = exterior_algebra(5, 2);
  for (std::uint32_t u = 0; u < 4; ++u)
    for (std::uint32_t v = 0; v < 4; ++v)
      CHECK(T.core->basis_product(u, v) == E.core->basis_product(u, v));
}

TEST_CASE("twisted product elements satisfy ring laws") {
  std::mt19937_64 rng(7);
  QciAlgebra A = root_of_unity_qci(13, 2, 4, 3);
  QciAlgebra B = make_qci(13, {2, 2}, {{1, 5}, {8, 1}});
  TwistMap t{2, 2, {{2, 7}, {3, 11}}};
  TwistedAlgebra T = twisted_product(A.core, B.core, t);
  CHECK(T.dim() == A.dim() * B.dim());
  for (int rep = 0; rep < 60; ++rep) {
    Element x = random_element(rng, T.core);
    Element y = random_element(rng, T.core);
    Element z = random_element(rng, T.core);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x + y) * z == x * z + y * z);
  }
  Element u = element_unit(T.core);
  Element x = random_element(rng, T.core);
  CHECK(u * x == x);
  CHECK(x * u == x);
}

TEST_CASE("cross-block commutation reads the twist") {
  QciAlgebra A = truncated_polynomial(5, 1, 3);
  QciAlgebra B = truncated_polynomial(5, 1, 2);
  TwistMap t{1, 1, {{2}}};
  TwistedAlgebra T = twisted_product(A.core, B.core, t);
  // generators: g0 = x (x) 1, g1 = 1 (x) y; g1 g0 = t[0][0] g0 g1
  Element g0 = element_basis(T.core, T.core->gen_basis(0));
  Element g1 = element_basis(T.core, T.core->gen_basis(1));
  CHECK(g1 * g0 == element_scale(2, g0 * g1));
  CHECK(T.core->gen_commutation(1, 0) == 2);
  CHECK(T.core->gen_commutation(0, 1) == 3);  // inverse of 2 mod 5
}

TEST_CASE("twist evaluation handles negative degrees") {
  PrimeField f(5);
  TwistMap t{1, 1, {{2}}};
  CHECK(t.eval(f, {1}, {1}) == 2);
  CHECK(t.eval(f, {1}, {-1}) == 3);  // 2^-1
  CHECK(t.eval(f, {2}, {3}) == f.pow(2, 6));
  CHECK(t.eval(f, {0}, {7}) == 1);
  CHECK_THROWS_AS(t.eval(f, {1, 1}, {1}), Error);
}

TEST_CASE("twisted product rejects mismatched data") {
  QciAlgebra A = truncated_polynomial(5, 1, 2);
  QciAlgebra B = truncated_polynomial(7, 1, 2);
  CHECK_THROWS_AS(twisted_product(A.core, B.core, trivial_twist(1, 1)), Error);
  QciAlgebra C = truncated_polynomial(5, 1, 2);
  CHECK_THROWS_AS(twisted_product(A.core, C.core, trivial_twist(2, 1)), Error);
  TwistMap zero{1, 1, {{0}}};
  try {
    twisted_product(A.core, C.core, zero);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Err::TwistMismatch);
  }
}

TEST_CASE("standard twist entries") {
  QciAlgebra A = make_qci(5, {2, 3}, {{1, 3}, {2, 1}});
  TwistMap t0 = standard_twist(A, {0});
  CHECK(t0.t == std::vector<std::vector<Scalar>>{{2}});  // q_21
  TwistMap t1 = standard_twist(A, {1});
  CHECK(t1.t == std::vector<std::vector<Scalar>>{{3}});  // q_12
}

TEST_CASE("subalgebra restriction") {
  QciAlgebra A = make_qci(13, {2, 3, 4}, {{1, 2, 5}, {7, 1, 3}, {8, 9, 1}});
  QciAlgebra S = subalgebra_on(A, {0, 2});
  CHECK(S.a == std::vector<std::uint32_t>{2, 4});
  CHECK(S.q == std::vector<std::vector<Scalar>>{{1, 5}, {8, 1}});
}

TEST_CASE("every proper split decomposes the algebra") {
  std::vector<QciAlgebra> algebras;
  algebras.push_back(make_qci(5, {2, 3}, {{1, 3}, {2, 1}}));
  algebras.push_back(exterior_algebra(5, 3));
  algebras.push_back(make_qci(13, {2, 3, 2}, {{1, 2, 5}, {7, 1, 3}, {8, 9, 1}}));
  algebras.push_back(symmetric_double(root_of_unity_qci(5, 2, 3, 4)));
  for (const QciAlgebra& A : algebras) {
    const std::size_t c = A.c();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << c); ++mask) {
      std::vector<std::size_t> I;
      for (std::size_t g = 0; g < c; ++g)
        if (mask & (std::size_t{1} << g)) I.push_back(g);
      CHECK(decomposition_matches(A, I));
    }
  }
}

TEST_CASE("non-prefix splits need the generator relabeling") {
  // For I = {2} in a c = 2 algebra with q_12 != 1, comparing against the
  // unpermuted basis indices would fail; the relabeled comparison passes.
  QciAlgebra A = make_qci(5, {2, 2}, {{1, 2}, {3, 1}});
  CHECK(decomposition_matches(A, {1}));
  QciAlgebra B = subalgebra_on(A, {1});
  QciAlgebra C = subalgebra_on(A, {0});
  TwistedAlgebra T = twisted_product(B.core, C.core, standard_twist(A, {1}));
  bool all_equal = true;
  for (std::uint32_t u = 0; u < 4 && all_equal; ++u)
    for (std::uint32_t v = 0; v < 4 && all_equal; ++v)
      if (!(A.core->basis_product(u, v) == T.core->basis_product(u, v))) all_equal = false;
  CHECK_FALSE(all_equal);
}
