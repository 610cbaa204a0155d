#include <functional>
#include <string>
#include <vector>

#include "doctest.h"
#include "json_io.hpp"

using namespace qci;

namespace {

bool fails_with(Err code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("algebra json roundtrip preserves the presentation") {
  QciAlgebra A = make_qci(5, {2, 3}, {{1, 3}, {2, 1}});
  Json j = algebra_to_json(A);
  CHECK(j["p"] == 5);
  CHECK(j["c"] == 2);
  CHECK(j["a"] == Json::array({2, 3}));
  CHECK(j["q"][0][1] == 3);

  QciAlgebra B = algebra_from_json(j);
  CHECK(B.p == A.p);
  CHECK(B.a == A.a);
  CHECK(B.q == A.q);
  for (std::uint32_t u = 0; u < A.dim(); ++u)
    for (std::uint32_t v = 0; v < A.dim(); ++v)
      CHECK(A.core->basis_product(u, v) == B.core->basis_product(u, v));
}

TEST_CASE("algebra json rejects malformed input") {
  CHECK(fails_with(Err::ParseError, [] { parse_json_text("not json at all {"); }));
  CHECK(fails_with(Err::ParseError, [] { algebra_from_json(Json::array()); }));
  CHECK(fails_with(Err::ParseError, [] {
    algebra_from_json(parse_json_text(R"({"c":1,"a":[2],"q":[[1]]})"));
  }));
  CHECK(fails_with(Err::ParseError, [] {
    algebra_from_json(parse_json_text(R"({"p":5,"c":2,"a":[2],"q":[[1,1],[1,1]]})"));
  }));
  CHECK(fails_with(Err::ParseError, [] {
    algebra_from_json(parse_json_text(R"({"p":5,"c":1,"a":[2],"q":[[1],[1]]})"));
  }));
  CHECK(fails_with(Err::ParseError, [] {
    algebra_from_json(parse_json_text(R"({"p":5,"c":1,"a":[2],"q":[[7]]})"));
  }));
  // shape is fine but the matrix violates q12 q21 = 1
  CHECK(fails_with(Err::BadCommutationMatrix, [] {
    algebra_from_json(parse_json_text(R"({"p":5,"c":2,"a":[2,2],"q":[[1,2],[2,1]]})"));
  }));
  CHECK(fails_with(Err::NotPrime, [] {
    algebra_from_json(parse_json_text(R"({"p":6,"c":1,"a":[2],"q":[[1]]})"));
  }));
}

TEST_CASE("module json roundtrip, graded and ungraded") {
  QciAlgebra A = make_qci(5, {2, 3}, {{1, 3}, {2, 1}});
  Module fm = free_module(A.core, 1);
  Json j = module_to_json(fm);
  CHECK(j["dim"] == 6);
  CHECK(j["actions"].size() == 2);
  CHECK(j.contains("degrees"));

  Module back = module_from_json(A, j);
  CHECK(back.n == fm.n);
  CHECK(back.graded());
  CHECK(*back.degrees == *fm.degrees);
  for (std::size_t g = 0; g < 2; ++g) CHECK(back.gen_actions[g] == fm.gen_actions[g]);

  // strip the grading and the parse must come back ungraded
  j.erase("degrees");
  Module ung = module_from_json(A, j);
  CHECK_FALSE(ung.graded());
  CHECK(ung.n == fm.n);
}

TEST_CASE("module json rejects malformed and invalid input") {
  QciAlgebra A = make_qci(5, {2, 3}, {{1, 3}, {2, 1}});
  auto parse = [&](const std::string& s) { return module_from_json(A, parse_json_text(s)); };

  CHECK(fails_with(Err::ParseError, [&] { parse(R"({"dim":1})"); }));
  CHECK(fails_with(Err::ParseError, [&] { parse(R"({"dim":1,"actions":[[[0]]]})"); }));
  CHECK(fails_with(Err::ParseError, [&] { parse(R"({"dim":2,"actions":[[[0]],[[0]]]})"); }));
  CHECK(fails_with(Err::ParseError, [&] {
    parse(R"({"dim":1,"actions":[[[0]],[[0]]],"degrees":[[0]]})");
  }));
  CHECK(fails_with(Err::ParseError, [&] {
    parse(R"({"dim":1,"actions":[[[0]],[[5]]]})");
  }));
  // well-formed JSON whose actions violate x2^3 = 0
  CHECK(fails_with(Err::BadParams, [&] {
    parse(R"({"dim":1,"actions":[[[0]],[[1]]]})");
  }));
  // valid one-dimensional module: both generators act by zero
  Module k = parse(R"({"dim":1,"actions":[[[0]],[[0]]],"degrees":[[0,0]]})");
  CHECK(k.n == 1);
  CHECK(k.graded());
}

TEST_CASE("ext table json carries dims and window") {
  Json j = ext_table_json({1, 2, 3, 4});
  CHECK(j["window"] == 3);
  CHECK(j["dims"] == Json::array({1, 2, 3, 4}));
  CHECK(fails_with(Err::BadParams, [] { ext_table_json({}); }));
}

TEST_CASE("twist json roundtrip") {
  TwistMap t;
  t.c1 = 2;
  t.c2 = 3;
  t.t = {{1, 2, 3}, {4, 1, 2}};
  Json j = twist_to_json(t);
  TwistMap back = twist_from_json(j);
  CHECK(back.c1 == 2);
  CHECK(back.c2 == 3);
  CHECK(back.t == t.t);

  CHECK(fails_with(Err::ParseError, [] { twist_from_json(Json::array()); }));
  CHECK(fails_with(Err::ParseError, [] {
    twist_from_json(parse_json_text("[[1,2],[3]]"));
  }));
}
