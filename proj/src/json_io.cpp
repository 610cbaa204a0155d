#include "json_io.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

namespace qci {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Err::ParseError, what); }

std::uint64_t get_uint(const Json& j, const char* key, std::uint64_t max) {
  if (!j.contains(key)) parse_fail(std::string("missing key: ") + key);
  const Json& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    parse_fail(std::string("key must be a nonnegative integer: ") + key);
  std::uint64_t u = v.get<std::uint64_t>();
  if (u > max) parse_fail(std::string("value out of range for key: ") + key);
  return u;
}

std::uint64_t scalar_entry(const Json& v, std::uint64_t p, const char* where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    parse_fail(std::string("entries must be nonnegative integers in ") + where);
  std::uint64_t u = v.get<std::uint64_t>();
  if (u >= p) parse_fail(std::string("entry out of range in ") + where);
  return u;
}

Mat mat_from_json(const PrimeField& f, const Json& j, std::size_t n, const char* where) {
  if (!j.is_array() || j.size() != n) parse_fail(std::string("matrix must have dim rows in ") + where);
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != n)
      parse_fail(std::string("matrix rows must have dim entries in ") + where);
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = static_cast<std::uint32_t>(scalar_entry(row[c], f.p(), where));
  }
  return m;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("malformed JSON input");
  return j;
}

Json algebra_to_json(const QciAlgebra& A) {
  Json j;
  j["p"] = A.p;
  j["c"] = A.c();
  j["a"] = A.a;
  j["q"] = A.q;
  return j;
}

QciAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("algebra must be a JSON object");
  std::uint64_t p = get_uint(j, "p", (std::uint64_t{1} << 31) - 1);
  std::uint64_t c = get_uint(j, "c", 16);
  if (!j.contains("a") || !j.at("a").is_array() || j.at("a").size() != c)
    parse_fail("key a must be an array of length c");
  std::vector<std::uint32_t> a(c);
  for (std::size_t i = 0; i < c; ++i) {
    std::uint64_t v = scalar_entry(j.at("a")[i], std::uint64_t{1} << 16, "a");
    a[i] = static_cast<std::uint32_t>(v);
  }
  if (!j.contains("q") || !j.at("q").is_array() || j.at("q").size() != c)
    parse_fail("key q must be a c x c matrix");
  std::vector<std::vector<Scalar>> q(c);
  for (std::size_t i = 0; i < c; ++i) {
    const Json& row = j.at("q")[i];
    if (!row.is_array() || row.size() != c) parse_fail("key q must be a c x c matrix");
    q[i].resize(c);
    for (std::size_t k = 0; k < c; ++k) q[i][k] = scalar_entry(row[k], p, "q");
  }
  return make_qci(p, std::move(a), std::move(q));
}

Json module_to_json(const Module& m) {
  Json j;
  j["dim"] = m.n;
  Json actions = Json::array();
  for (const Mat& g : m.gen_actions) actions.push_back(mat_to_json(g));
  j["actions"] = std::move(actions);
  if (m.graded()) j["degrees"] = *m.degrees;
  return j;
}

Module module_from_json(const QciAlgebra& A, const Json& j) {
  if (!j.is_object()) parse_fail("module must be a JSON object");
  std::size_t n = get_uint(j, "dim", 1u << 12);
  if (!j.contains("actions") || !j.at("actions").is_array() || j.at("actions").size() != A.c())
    parse_fail("key actions must hold one matrix per generator");
  const PrimeField& f = A.core->field();
  std::vector<Mat> actions;
  actions.reserve(A.c());
  for (std::size_t g = 0; g < A.c(); ++g)
    actions.push_back(mat_from_json(f, j.at("actions")[g], n, "actions"));
  std::optional<std::vector<Degree>> degrees;
  if (j.contains("degrees")) {
    const Json& d = j.at("degrees");
    if (!d.is_array() || d.size() != n) parse_fail("key degrees must have one vector per basis row");
    std::vector<Degree> degs(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Json& row = d[r];
      if (!row.is_array() || row.size() != A.c())
        parse_fail("degree vectors must have one entry per generator");
      degs[r].resize(A.c());
      for (std::size_t k = 0; k < A.c(); ++k) {
        if (!row[k].is_number_integer()) parse_fail("degrees must be integers");
        std::int64_t v = row[k].get<std::int64_t>();
        if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
          parse_fail("degree entry out of range");
        degs[r][k] = static_cast<std::int32_t>(v);
      }
    }
    degrees = std::move(degs);
  }
  return make_module(A.core, std::move(actions), std::move(degrees));
}

Json ext_table_json(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw Error(Err::BadParams, "ext table needs at least the degree-0 entry");
  Json j;
  j["dims"] = dims;
  j["window"] = dims.size() - 1;
  return j;
}

Json twist_to_json(const TwistMap& t) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.c1; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < t.c2; ++k) row.push_back(t.t[i][k]);
    rows.push_back(std::move(row));
  }
  return rows;
}

TwistMap twist_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("twist must be a nonempty matrix");
  TwistMap t;
  t.c1 = j.size();
  t.c2 = 0;
  for (std::size_t i = 0; i < t.c1; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.empty()) parse_fail("twist rows must be nonempty arrays");
    if (i == 0) t.c2 = row.size();
    if (row.size() != t.c2) parse_fail("twist rows must have equal length");
    std::vector<Scalar> vals(t.c2);
    for (std::size_t k = 0; k < t.c2; ++k) {
      if (!row[k].is_number_unsigned() && !(row[k].is_number_integer() && row[k].get<std::int64_t>() >= 0))
        parse_fail("twist entries must be nonnegative integers");
      vals[k] = row[k].get<std::uint64_t>();
    }
    t.t.push_back(std::move(vals));
  }
  return t;
}

}  // namespace qci
