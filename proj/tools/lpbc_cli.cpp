// Command-line front end for the lpbc kernel. Talks to the shared library
// exclusively through the C API in lpbc.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpbc.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct ObjDeleter {
  void operator()(lpbc_obj* o) const { lpbc_obj_free(o); }
};
using ObjPtr = std::unique_ptr<lpbc_obj, ObjDeleter>;

struct StrDeleter {
  void operator()(char* s) const { lpbc_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitError);
}

void require_ok(int status) {
  if (status != LPBC_OK) die(lpbc_last_error());
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) die("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ObjPtr parse_input(const std::string& path) {
  lpbc_obj* obj = nullptr;
  require_ok(lpbc_parse(read_input(path).c_str(), &obj));
  return ObjPtr(obj);
}

ObjPtr realize(const ObjPtr& obj) {
  lpbc_obj* m = nullptr;
  require_ok(lpbc_as_matroid(obj.get(), &m));
  return ObjPtr(m);
}

void print_string(char* text) {
  StrPtr guard(text);
  if (text != nullptr) std::cout << text;
}

std::vector<int> parse_element_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      die("bad element list '" + csv + "'");
    }
  }
  return out;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (value == nullptr) return fallback;
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    return fallback;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid kernel for the intersection of bicircular and lattice path matroids"};
  app.require_subcommand(1);
  std::uint64_t node_budget = env_u64("LPBC_NODE_BUDGET", 100000000ULL);
  int max_elements = static_cast<int>(env_u64("LPBC_MAX_ELEMENTS", 10));
  std::uint64_t seed = 0;
  app.add_option("--node-budget", node_budget, "search node budget");
  app.add_option("--max-elements", max_elements, "ground set cap for membership decisions");
  app.add_option("--seed", seed, "reserved; every algorithm is deterministic");

  // construct
  auto* construct = app.add_subcommand("construct", "build a matroid and print it");
  std::vector<int> uniform_params;
  std::string family_name;
  int family_n = 0, family_k = 0;
  std::string construct_input;
  bool from_lpm = false, from_intervals = false, from_setfamily = false, from_graph = false,
       from_cycle = false;
  construct->add_option("--uniform", uniform_params, "uniform matroid: rank n")->expected(2);
  construct->add_option("--family", family_name, "family name: P Pprime A B C D E");
  construct->add_option("--n", family_n, "family parameter n");
  construct->add_option("--k", family_k, "family parameter k");
  construct->add_flag("--lpm", from_lpm, "read a lattice path presentation");
  construct->add_flag("--intervals", from_intervals, "read a standard presentation");
  construct->add_flag("--setfamily", from_setfamily, "read a set family");
  construct->add_flag("--graph", from_graph, "read a graph; bicircular matroid");
  construct->add_flag("--cycle", from_cycle, "read a graph; cycle matroid");
  construct->add_option("--input", construct_input, "input path (default stdin)");

  // bases / circuits / rank / dual / minor
  std::string io_input;
  auto* bases = app.add_subcommand("bases", "list the bases of the input");
  bases->add_option("input", io_input, "input path (default stdin)");
  auto* circuits_cmd = app.add_subcommand("circuits", "list the circuits of the input");
  circuits_cmd->add_option("input", io_input, "input path (default stdin)");
  auto* rank_cmd = app.add_subcommand("rank", "rank of a subset");
  std::string rank_set;
  rank_cmd->add_option("input", io_input, "input path (default stdin)");
  rank_cmd->add_option("--set", rank_set, "comma-separated elements (default: ground set)");
  auto* dual_cmd = app.add_subcommand("dual", "dual matroid");
  dual_cmd->add_option("input", io_input, "input path (default stdin)");
  auto* minor_cmd = app.add_subcommand("minor", "contract and delete");
  std::string contract_csv, delete_csv;
  minor_cmd->add_option("input", io_input, "input path (default stdin)");
  minor_cmd->add_option("--contract", contract_csv, "comma-separated elements");
  minor_cmd->add_option("--delete", delete_csv, "comma-separated elements");

  // check
  auto* check = app.add_subcommand("check", "class membership checks");
  std::string check_class;
  bool check_lp = false, check_bc = false;
  check->add_option("--class", check_class, "class name: lpbc");
  check->add_flag("--lattice-path", check_lp, "lattice path membership");
  check->add_flag("--bicircular", check_bc, "bicircular membership");
  check->add_option("input", io_input, "input path (default stdin)");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "the 19 excluded minors");
  auto* catalog_list = catalog_cmd->add_subcommand("list", "list the catalog");
  auto* catalog_emit = catalog_cmd->add_subcommand("emit", "emit one entry");
  std::string emit_name, emit_rep = "matroid";
  catalog_emit->add_option("name", emit_name, "entry name")->required();
  catalog_emit->add_option("--rep", emit_rep, "representation: matroid graph lpm");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "enumerate test corpora");
  bool corpus_lpm = false, corpus_graphs = false;
  int corpus_max_n = 8, corpus_edges = 7, corpus_vertices = 4;
  corpus->add_flag("--lpm", corpus_lpm, "lattice path corpus");
  corpus->add_flag("--graphs", corpus_graphs, "bicircular corpus");
  corpus->add_option("--max-n", corpus_max_n, "m+r bound for --lpm");
  corpus->add_option("--max-edges", corpus_edges, "edge bound for --graphs");
  corpus->add_option("--max-vertices", corpus_vertices, "vertex bound for --graphs");

  // verify
  auto* verify = app.add_subcommand("verify", "run the characterization verification harness");
  std::string verify_what;
  int verify_lpm_max = 8, verify_edges = 7, verify_vertices = 4;
  verify->add_option("target", verify_what, "what to verify: theorem1")->required();
  verify->add_option("--lpm-max", verify_lpm_max, "m+r bound for the lattice path corpus");
  verify->add_option("--max-edges", verify_edges, "edge bound for the bicircular corpus");
  verify->add_option("--max-vertices", verify_vertices, "vertex bound for the bicircular corpus");

  CLI11_PARSE(app, argc, argv);

  if (construct->parsed()) {
    lpbc_obj* out = nullptr;
    if (!uniform_params.empty()) {
      require_ok(lpbc_uniform(uniform_params[0], uniform_params[1], &out));
    } else if (!family_name.empty()) {
      require_ok(lpbc_family(family_name.c_str(), family_n, family_k, &out));
    } else if (from_lpm || from_intervals || from_setfamily || from_graph) {
      ObjPtr obj = parse_input(construct_input);
      require_ok(lpbc_as_matroid(obj.get(), &out));
    } else if (from_cycle) {
      ObjPtr obj = parse_input(construct_input);
      require_ok(lpbc_cycle_matroid(obj.get(), &out));
    } else {
      die("construct needs one of --uniform, --family, --lpm, --intervals, --setfamily, --graph, --cycle");
    }
    ObjPtr guard(out);
    char* text = nullptr;
    require_ok(lpbc_obj_text(out, &text));
    print_string(text);
    return 0;
  }

  if (bases->parsed()) {
    ObjPtr m = realize(parse_input(io_input));
    char* text = nullptr;
    require_ok(lpbc_bases_text(m.get(), &text));
    print_string(text);
    return 0;
  }

  if (circuits_cmd->parsed()) {
    ObjPtr m = realize(parse_input(io_input));
    char* text = nullptr;
    require_ok(lpbc_circuits_text(m.get(), &text));
    print_string(text);
    return 0;
  }

  if (rank_cmd->parsed()) {
    ObjPtr m = realize(parse_input(io_input));
    std::vector<int> set = parse_element_list(rank_set);
    if (rank_set.empty()) {
      int n = 0, r = 0, b = 0;
      require_ok(lpbc_matroid_params(m.get(), &n, &r, &b));
      for (int e = 1; e <= n; ++e) set.push_back(e);
    }
    int rank = 0;
    require_ok(lpbc_rank_of(m.get(), set.data(), static_cast<int>(set.size()), &rank));
    std::cout << "rank " << rank << "\n";
    return 0;
  }

  if (dual_cmd->parsed()) {
    ObjPtr m = realize(parse_input(io_input));
    lpbc_obj* d = nullptr;
    require_ok(lpbc_dual(m.get(), &d));
    ObjPtr guard(d);
    char* text = nullptr;
    require_ok(lpbc_obj_text(d, &text));
    print_string(text);
    return 0;
  }

  if (minor_cmd->parsed()) {
    ObjPtr m = realize(parse_input(io_input));
    const std::vector<int> contract = parse_element_list(contract_csv);
    const std::vector<int> remove = parse_element_list(delete_csv);
    lpbc_obj* out = nullptr;
    require_ok(lpbc_minor(m.get(), contract.data(), static_cast<int>(contract.size()),
                          remove.data(), static_cast<int>(remove.size()), &out));
    ObjPtr guard(out);
    char* text = nullptr;
    require_ok(lpbc_obj_text(out, &text));
    print_string(text);
    return 0;
  }

  if (check->parsed()) {
    const int modes = (check_class.empty() ? 0 : 1) + (check_lp ? 1 : 0) + (check_bc ? 1 : 0);
    if (modes != 1) die("check needs exactly one of --class lpbc, --lattice-path, --bicircular");
    ObjPtr m = realize(parse_input(io_input));
    if (!check_class.empty()) {
      if (check_class != "lpbc") die("unknown class '" + check_class + "'");
      int verdict = 0;
      char* witness = nullptr;
      require_ok(lpbc_check_member(m.get(), node_budget, max_elements, &verdict, &witness));
      StrPtr guard(witness);
      std::cout << "member " << (verdict ? "true" : "false") << "\n";
      if (witness) std::cout << witness;
      return verdict ? 0 : kExitFail;
    }
    if (check_lp) {
      int verdict = 0;
      char* witness = nullptr;
      require_ok(lpbc_check_lattice_path(m.get(), node_budget, max_elements, &verdict, &witness));
      StrPtr guard(witness);
      std::cout << "lattice-path " << (verdict ? "true" : "false") << "\n";
      if (witness) std::cout << witness;
      return verdict ? 0 : kExitFail;
    }
    int verdict = 0;
    char* graph = nullptr;
    require_ok(lpbc_check_bicircular(m.get(), node_budget, &verdict, &graph));
    StrPtr guard(graph);
    std::cout << "bicircular " << (verdict ? "true" : "false") << "\n";
    if (graph) std::cout << graph;
    return verdict ? 0 : kExitFail;
  }

  if (catalog_cmd->parsed()) {
    if (catalog_list->parsed()) {
      char* text = nullptr;
      require_ok(lpbc_catalog_list(&text));
      print_string(text);
      return 0;
    }
    if (catalog_emit->parsed()) {
      char* text = nullptr;
      require_ok(lpbc_catalog_emit(emit_name.c_str(), emit_rep.c_str(), &text));
      print_string(text);
      return 0;
    }
    die("catalog needs a subcommand: list or emit");
  }

  if (corpus->parsed()) {
    if (corpus_lpm == corpus_graphs) die("corpus needs exactly one of --lpm, --graphs");
    char* text = nullptr;
    if (corpus_lpm) {
      require_ok(lpbc_corpus_lpm(corpus_max_n, &text));
    } else {
      require_ok(lpbc_corpus_graphs(corpus_edges, corpus_vertices, &text));
    }
    print_string(text);
    return 0;
  }

  if (verify->parsed()) {
    if (verify_what != "theorem1") die("unknown verify target '" + verify_what + "'");
    char* report = nullptr;
    int failures = 0;
    require_ok(lpbc_verify_theorem1(node_budget, max_elements, verify_lpm_max, verify_edges,
                                    verify_vertices, &report, &failures));
    StrPtr guard(report);
    if (report) std::cout << report;
    return failures == 0 ? 0 : kExitFail;
  }

  return 0;
}
