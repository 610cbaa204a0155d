#include "qci.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "campaign.hpp"

struct qci_algebra {
  qci::QciAlgebra A;
};

struct qci_module {
  qci::Module m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int map_err(qci::Err code) {
  switch (code) {
    case qci::Err::ParseError:
      return QCI_E_PARSE;
    case qci::Err::ResourceLimit:
      return QCI_E_RESOURCE;
    case qci::Err::Internal:
      return QCI_E_INTERNAL;
    default:
      return QCI_E_BAD_PARAMS;
  }
}

template <typename Fn>
int guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return QCI_OK;
  } catch (const qci::Error& e) {
    g_last_error = std::string(qci::err_name(e.code())) + ": " + e.what();
    return map_err(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCI_E_INTERNAL;
  }
}

int null_arg(const char* fn) {
  g_last_error = std::string("null argument passed to ") + fn;
  return QCI_E_BAD_PARAMS;
}

}  // namespace

extern "C" {

const char* qci_status_name(int status) {
  switch (status) {
    case QCI_OK:
      return "ok";
    case QCI_E_PARSE:
      return "parse-error";
    case QCI_E_BAD_PARAMS:
      return "bad-params";
    case QCI_E_RESOURCE:
      return "resource-limit";
    case QCI_E_INTERNAL:
      return "internal-error";
    default:
      return "unknown-status";
  }
}

const char* qci_last_error(void) { return g_last_error.c_str(); }

void qci_string_free(char* s) { std::free(s); }

int qci_algebra_from_json(const char* text, qci_algebra** out) {
  if (text == nullptr || out == nullptr) return null_arg("qci_algebra_from_json");
  return guard([&] {
    qci::QciAlgebra A = qci::algebra_from_json(qci::parse_json_text(text));
    *out = new qci_algebra{std::move(A)};
  });
}

int qci_algebra_to_json(const qci_algebra* a, char** out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_algebra_to_json");
  return guard([&] { *out = dup_string(qci::algebra_to_json(a->A).dump()); });
}

void qci_algebra_free(qci_algebra* a) { delete a; }

int qci_example(const char* family, uint64_t p, size_t c, uint32_t a, uint64_t q, char** out) {
  if (family == nullptr || out == nullptr) return null_arg("qci_example");
  return guard([&] {
    std::string name(family);
    qci::QciAlgebra A = [&] {
      if (name == "exterior") return qci::exterior_algebra(p, c);
      if (name == "truncated") return qci::truncated_polynomial(p, c, a);
      if (name == "root-of-unity") return qci::root_of_unity_qci(p, c, a, q);
      throw qci::Error(qci::Err::BadParams, "unknown family: " + name);
    }();
    *out = dup_string(qci::algebra_to_json(A).dump());
  });
}

int qci_algebra_dim(const qci_algebra* a, size_t* out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_algebra_dim");
  *out = a->A.dim();
  g_last_error.clear();
  return QCI_OK;
}

int qci_algebra_gen_count(const qci_algebra* a, size_t* out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_algebra_gen_count");
  *out = a->A.c();
  g_last_error.clear();
  return QCI_OK;
}

int qci_nakayama_json(const qci_algebra* a, char** out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_nakayama_json");
  return guard([&] {
    qci::NakayamaInfo info = qci::nakayama(a->A);
    qci::Json j;
    j["gamma"] = info.gamma;
    j["symmetric"] = info.symmetric;
    j["identity_holds"] = qci::nakayama_identity_holds(a->A);
    *out = dup_string(j.dump());
  });
}

int qci_symmetric_double_json(const qci_algebra* a, char** out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_symmetric_double_json");
  return guard([&] { *out = dup_string(qci::algebra_to_json(qci::symmetric_double(a->A)).dump()); });
}

int qci_opposite_json(const qci_algebra* a, char** out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_opposite_json");
  return guard([&] { *out = dup_string(qci::algebra_to_json(qci::opposite(a->A)).dump()); });
}

int qci_decomposition_check(const qci_algebra* a, const size_t* split, size_t split_len,
                            int* out_match) {
  if (a == nullptr || split == nullptr || out_match == nullptr)
    return null_arg("qci_decomposition_check");
  return guard([&] {
    std::vector<std::size_t> I(split, split + split_len);
    *out_match = qci::decomposition_matches(a->A, I) ? 1 : 0;
  });
}

int qci_module_from_json(const qci_algebra* a, const char* text, qci_module** out) {
  if (a == nullptr || text == nullptr || out == nullptr) return null_arg("qci_module_from_json");
  return guard([&] {
    qci::Module m = qci::module_from_json(a->A, qci::parse_json_text(text));
    *out = new qci_module{std::move(m)};
  });
}

int qci_module_to_json(const qci_module* m, char** out) {
  if (m == nullptr || out == nullptr) return null_arg("qci_module_to_json");
  return guard([&] { *out = dup_string(qci::module_to_json(m->m).dump()); });
}

int qci_module_trivial(const qci_algebra* a, qci_module** out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_module_trivial");
  return guard([&] { *out = new qci_module{qci::trivial_module(a->A.core)}; });
}

void qci_module_free(qci_module* m) { delete m; }

int qci_ext_table_json(const qci_module* m, const qci_module* n, size_t window, char** out) {
  if (m == nullptr || n == nullptr || out == nullptr) return null_arg("qci_ext_table_json");
  return guard([&] {
    auto dims = qci::ext_dims(m->m, n->m, window);
    *out = dup_string(qci::ext_table_json(dims).dump());
  });
}

int qci_hochschild_json(const qci_algebra* a, size_t window, char** out) {
  if (a == nullptr || out == nullptr) return null_arg("qci_hochschild_json");
  return guard([&] {
    auto dims = qci::hochschild_dims(a->A, window);
    std::size_t z = qci::center_dim(a->A);
    qci::Json j = qci::ext_table_json(dims);
    j["center_dim"] = z;
    j["hh0_matches_center"] = dims[0] == z;
    *out = dup_string(j.dump());
  });
}

int qci_run_campaign(const char* spec_text, char** report_out, int* pass_out) {
  if (spec_text == nullptr || report_out == nullptr || pass_out == nullptr)
    return null_arg("qci_run_campaign");
  return guard([&] {
    qci::ExperimentSpec spec = qci::spec_from_json(qci::parse_json_text(spec_text));
    qci::CampaignResult res = qci::run_campaign(spec);
    *report_out = dup_string(res.report);
    *pass_out = res.pass ? 1 : 0;
  });
}

}  // extern "C"
