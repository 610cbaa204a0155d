#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qci.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success or aggregate PASS, 1 verification failure, 2 usage
// or input errors.
[[noreturn]] void die(int status) {
  std::cerr << "error (" << qci_status_name(status) << "): " << qci_last_error() << "\n";
  std::exit(2);
}

[[noreturn]] void die_msg(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

std::string read_source(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) die_msg("cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

struct AlgebraHandle {
  qci_algebra* a = nullptr;
  ~AlgebraHandle() { qci_algebra_free(a); }
};

struct ModuleHandle {
  qci_module* m = nullptr;
  ~ModuleHandle() { qci_module_free(m); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { qci_string_free(s); }
};

void load_algebra(const std::string& path, AlgebraHandle& h) {
  std::string text = read_source(path);
  int st = qci_algebra_from_json(text.c_str(), &h.a);
  if (st != QCI_OK) die(st);
}

void print_object(const std::string& text, const std::string& format) {
  if (format == "json") {
    std::cout << text << "\n";
    return;
  }
  json j = json::parse(text);
  std::size_t width = 0;
  for (const auto& item : j.items()) width = std::max(width, item.key().size());
  for (const auto& item : j.items())
    std::cout << item.key() << std::string(width - item.key().size() + 2, ' ')
              << item.value().dump() << "\n";
}

void render_report_table(const std::string& report) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    json j = json::parse(line);
    if (j.contains("spec")) {
      const json& s = j["spec"];
      std::cout << "campaign " << s["campaign"].get<std::string>() << "  seed " << s["seed"]
                << "  corpus " << s["corpus"] << "  window " << s["window"] << "\n";
    } else if (j.contains("summary")) {
      const json& s = j["summary"];
      std::cout << s["verdict"].get<std::string>() << "  cases " << s["cases"] << "  violations "
                << s["violations"] << "  skipped " << s["skipped"] << "\n";
    } else {
      std::cout << "case " << j["case"];
      if (j.contains("skipped")) {
        std::cout << "  skipped: " << j["error"].get<std::string>();
      } else {
        if (j.contains("verdict")) std::cout << "  " << j["verdict"].get<std::string>();
        if (j.contains("match")) std::cout << (j["match"].get<bool>() ? "  match" : "  mismatch");
        std::cout << (j["pass"].get<bool>() ? "  ok" : "  FAIL");
      }
      std::cout << "\n";
    }
  }
}

int run_campaign_spec(const json& spec, const std::string& format) {
  StringOut report;
  int pass = 0;
  int st = qci_run_campaign(spec.dump().c_str(), &report.s, &pass);
  if (st != QCI_OK) die(st);
  if (format == "json")
    std::cout << report.s;
  else
    render_report_table(report.s);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and verification campaigns for quantum complete intersections"};
  app.require_subcommand(1);

  std::string algebra_path;
  std::string format = "json";
  std::string family;
  std::string campaign;
  std::vector<std::string> module_paths;
  std::uint64_t p = 5, qval = 1, seed = 0;
  std::size_t c = 1, window = 10, corpus = 20, budget_dim = 64;
  std::uint32_t aexp = 2;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* ex = app.add_subcommand("example", "Emit a named algebra family as JSON");
  ex->add_option("family", family, "exterior | truncated | root-of-unity")->required();
  ex->add_option("--p", p, "field characteristic (prime)");
  ex->add_option("--c", c, "number of generators");
  ex->add_option("--a", aexp, "exponent bound (truncated, root-of-unity)");
  ex->add_option("--q", qval, "commutator (root-of-unity; needs q^(a-1) = 1)");
  add_format(ex);

  CLI::App* nak = app.add_subcommand("nakayama", "Nakayama automorphism data");
  nak->add_option("--algebra", algebra_path, "algebra JSON file or -")->required();
  add_format(nak);

  CLI::App* dbl = app.add_subcommand("double", "Symmetric double on 2c generators");
  dbl->add_option("--algebra", algebra_path, "algebra JSON file or -")->required();
  add_format(dbl);

  CLI::App* dec = app.add_subcommand("decompose", "Check all proper generator splits");
  dec->add_option("--algebra", algebra_path, "algebra JSON file or -")->required();
  add_format(dec);

  CLI::App* ext = app.add_subcommand("ext", "Ext dimension table for a module pair");
  ext->add_option("--algebra", algebra_path, "algebra JSON file or -")->required();
  ext->add_option("--window", window, "top Ext degree");
  ext->add_option("modules", module_paths, "module JSON files (defaults to the simple module)")
      ->expected(0, 2);
  add_format(ext);

  CLI::App* hh = app.add_subcommand("hochschild", "Hochschild cohomology dimensions");
  hh->add_option("--algebra", algebra_path, "algebra JSON file or -")->required();
  std::size_t hh_window = 4;
  hh->add_option("--window", hh_window, "top cohomological degree");
  add_format(hh);

  CLI::App* kun = app.add_subcommand("kunneth", "Run the kunneth verification campaign");
  std::size_t kun_window = 4;
  kun->add_option("--window", kun_window, "top Ext degree");
  kun->add_option("--corpus", corpus, "number of sampled cases");
  kun->add_option("--seed", seed, "corpus seed");
  kun->add_option("--budget-dim", budget_dim, "factor algebra dimension cap");
  add_format(kun);

  CLI::App* ver = app.add_subcommand("verify", "Run a verification campaign");
  ver->add_option("--campaign", campaign,
                  "nakayama | double | decompose | kunneth | ext-symmetry | hochschild")
      ->required();
  ver->add_option("--algebra", algebra_path, "algebra JSON file or - (sampled corpus when absent)");
  ver->add_option("--window", window, "Ext window for homological campaigns");
  ver->add_option("--corpus", corpus, "corpus size (cases or sampled algebras)");
  ver->add_option("--seed", seed, "corpus seed; fixed seed reproduces the report bytes");
  ver->add_option("--budget-dim", budget_dim, "dimension cap for sampled algebras");
  add_format(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (ex->parsed()) {
    StringOut out;
    int st = qci_example(family.c_str(), p, c, aexp, qval, &out.s);
    if (st != QCI_OK) die(st);
    print_object(out.s, format);
    return 0;
  }

  if (nak->parsed() || dbl->parsed()) {
    AlgebraHandle alg;
    load_algebra(algebra_path, alg);
    StringOut out;
    int st = nak->parsed() ? qci_nakayama_json(alg.a, &out.s) : qci_symmetric_double_json(alg.a, &out.s);
    if (st != QCI_OK) die(st);
    print_object(out.s, format);
    return 0;
  }

  if (dec->parsed()) {
    AlgebraHandle alg;
    load_algebra(algebra_path, alg);
    std::size_t gens = 0;
    qci_algebra_gen_count(alg.a, &gens);
    json splits = json::array();
    bool all = true;
    for (std::size_t mask = 1; gens >= 2 && mask + 1 < (std::size_t{1} << gens); ++mask) {
      std::vector<std::size_t> I;
      for (std::size_t i = 0; i < gens; ++i)
        if (mask & (std::size_t{1} << i)) I.push_back(i);
      int match = 0;
      int st = qci_decomposition_check(alg.a, I.data(), I.size(), &match);
      if (st != QCI_OK) die(st);
      splits.push_back(json{{"split", I}, {"match", match == 1}});
      all = all && match == 1;
    }
    if (format == "table") {
      for (const json& s : splits)
        std::cout << "split " << s["split"].dump()
                  << (s["match"].get<bool>() ? "  match" : "  MISMATCH") << "\n";
      std::cout << (all ? "all splits match" : "MISMATCH FOUND") << "\n";
    } else {
      json out;
      out["all_match"] = all;
      out["splits"] = splits;
      std::cout << out.dump() << "\n";
    }
    return all ? 0 : 1;
  }

  if (ext->parsed()) {
    AlgebraHandle alg;
    load_algebra(algebra_path, alg);
    ModuleHandle m, n;
    auto load_module = [&](std::size_t idx, ModuleHandle& h) {
      if (module_paths.size() > idx) {
        std::string text = read_source(module_paths[idx]);
        int st = qci_module_from_json(alg.a, text.c_str(), &h.m);
        if (st != QCI_OK) die(st);
      } else {
        int st = qci_module_trivial(alg.a, &h.m);
        if (st != QCI_OK) die(st);
      }
    };
    load_module(0, m);
    load_module(1, n);
    StringOut out;
    int st = qci_ext_table_json(m.m, n.m, window, &out.s);
    if (st != QCI_OK) die(st);
    print_object(out.s, format);
    return 0;
  }

  if (hh->parsed()) {
    AlgebraHandle alg;
    load_algebra(algebra_path, alg);
    StringOut out;
    int st = qci_hochschild_json(alg.a, hh_window, &out.s);
    if (st != QCI_OK) die(st);
    print_object(out.s, format);
    return 0;
  }

  if (kun->parsed()) {
    json spec;
    spec["campaign"] = "kunneth";
    spec["window"] = kun_window;
    spec["corpus"] = corpus;
    spec["seed"] = seed;
    spec["budget_dim"] = budget_dim;
    return run_campaign_spec(spec, format);
  }

  // verify
  json spec;
  spec["campaign"] = campaign;
  spec["window"] = window;
  spec["corpus"] = corpus;
  spec["seed"] = seed;
  spec["budget_dim"] = budget_dim;
  if (!algebra_path.empty()) {
    json alg = json::parse(read_source(algebra_path), nullptr, false);
    if (alg.is_discarded()) die_msg("algebra input is not valid JSON");
    spec["algebra"] = alg;
  }
  return run_campaign_spec(spec, format);
}
