#include "lpbc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lpbc/classifier.hpp"
#include "lpbc/textio.hpp"

using namespace lpbc;

struct lpbc_obj {
  ParsedObject value;
};

namespace {

thread_local std::string g_last_error = "";

int code_of(const Error& e) { return static_cast<int>(e.code()); }

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return LPBC_OK;
  } catch (const Error& e) {
    g_last_error = std::string(errc_name(e.code())) + ": " + e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LPBC_E_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const Matroid& as_matroid_ref(const lpbc_obj* obj) {
  if (obj == nullptr) fail(Errc::validation_error, "null object handle");
  const Matroid* m = std::get_if<Matroid>(&obj->value);
  if (m == nullptr) fail(Errc::validation_error, "object is not a matroid");
  return *m;
}

Mask mask_from_array(const int* elems, int len, int n) {
  Mask out = 0;
  for (int i = 0; i < len; ++i) {
    if (elems[i] < 1 || elems[i] > n) fail(Errc::validation_error, "element out of range");
    out |= element_bit(elems[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char* lpbc_last_error(void) { return g_last_error.c_str(); }

void lpbc_obj_free(lpbc_obj* obj) { delete obj; }

void lpbc_string_free(char* s) { std::free(s); }

int lpbc_parse(const char* text, lpbc_obj** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) fail(Errc::validation_error, "null argument");
    *out = new lpbc_obj{parse_object(text)};
  });
}

int lpbc_obj_kind(const lpbc_obj* obj, int* kind) {
  return guarded([&] {
    if (obj == nullptr || kind == nullptr) fail(Errc::validation_error, "null argument");
    *kind = static_cast<int>(obj->value.index()) + 1;
  });
}

int lpbc_obj_text(const lpbc_obj* obj, char** out) {
  return guarded([&] {
    if (obj == nullptr || out == nullptr) fail(Errc::validation_error, "null argument");
    *out = dup_string(to_text(obj->value));
  });
}

int lpbc_as_matroid(const lpbc_obj* obj, lpbc_obj** out) {
  return guarded([&] {
    if (obj == nullptr || out == nullptr) fail(Errc::validation_error, "null argument");
    *out = new lpbc_obj{realize_matroid(obj->value)};
  });
}

int lpbc_cycle_matroid(const lpbc_obj* graph, lpbc_obj** out) {
  return guarded([&] {
    if (graph == nullptr || out == nullptr) fail(Errc::validation_error, "null argument");
    const MultiGraph* g = std::get_if<MultiGraph>(&graph->value);
    if (g == nullptr) fail(Errc::validation_error, "object is not a graph");
    *out = new lpbc_obj{cycle_matroid(*g)};
  });
}

int lpbc_uniform(int rank, int size, lpbc_obj** out) {
  return guarded([&] {
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    *out = new lpbc_obj{uniform_matroid(rank, size)};
  });
}

int lpbc_family(const char* name, int n, int k, lpbc_obj** out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) fail(Errc::validation_error, "null argument");
    const auto fam = family_from_string(name);
    if (!fam) fail(Errc::unknown_name, "unknown family " + std::string(name));
    *out = new lpbc_obj{family_matroid(*fam, n, k)};
  });
}

int lpbc_matroid_params(const lpbc_obj* matroid, int* size, int* rank, int* basis_count) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (size) *size = m.size();
    if (rank) *rank = m.rank();
    if (basis_count) *basis_count = static_cast<int>(m.basis_count());
  });
}

int lpbc_bases_text(const lpbc_obj* matroid, char** out) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    std::string text;
    for (Mask b : m.bases()) {
      text += "basis";
      for (int e : elements_of(b)) text += " " + std::to_string(e);
      text += "\n";
    }
    *out = dup_string(text);
  });
}

int lpbc_circuits_text(const lpbc_obj* matroid, char** out) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    std::string text;
    for (Mask c : circuits(m)) {
      text += "circuit";
      for (int e : elements_of(c)) text += " " + std::to_string(e);
      text += "\n";
    }
    *out = dup_string(text);
  });
}

int lpbc_rank_of(const lpbc_obj* matroid, const int* set, int set_len, int* rank) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (rank == nullptr || (set == nullptr && set_len > 0))
      fail(Errc::validation_error, "null argument");
    *rank = m.rank_of(mask_from_array(set, set_len, m.size()));
  });
}

int lpbc_dual(const lpbc_obj* matroid, lpbc_obj** out) {
  return guarded([&] {
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    *out = new lpbc_obj{dual(as_matroid_ref(matroid))};
  });
}

int lpbc_minor(const lpbc_obj* matroid, const int* contract, int contract_len, const int* remove,
               int remove_len, lpbc_obj** out) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    *out = new lpbc_obj{minor(m, mask_from_array(contract, contract_len, m.size()),
                              mask_from_array(remove, remove_len, m.size()))};
  });
}

int lpbc_check_lattice_path(const lpbc_obj* matroid, uint64_t node_budget, int max_elements,
                            int* verdict, char** witness_text) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (verdict == nullptr) fail(Errc::validation_error, "null argument");
    Budget budget{node_budget, 0};
    const LatticePathDecision d = is_lattice_path(m, budget, max_elements);
    *verdict = d.is_member ? 1 : 0;
    if (witness_text) *witness_text = d.witness ? dup_string(witness_to_text(*d.witness)) : nullptr;
  });
}

int lpbc_check_bicircular(const lpbc_obj* matroid, uint64_t node_budget, int* verdict,
                          char** graph_text) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (verdict == nullptr) fail(Errc::validation_error, "null argument");
    Budget budget{node_budget, 0};
    const auto g = find_bicircular_representation(m, budget);
    *verdict = g ? 1 : 0;
    if (graph_text) *graph_text = g ? dup_string(to_text(*g)) : nullptr;
  });
}

int lpbc_check_member(const lpbc_obj* matroid, uint64_t node_budget, int max_elements, int* verdict,
                      char** witness_text) {
  return guarded([&] {
    const Matroid& m = as_matroid_ref(matroid);
    if (verdict == nullptr) fail(Errc::validation_error, "null argument");
    ClassifierConfig cfg;
    cfg.node_budget = node_budget;
    cfg.max_elements = max_elements;
    const Verdict v = member_theorem1(m, cfg);
    *verdict = v.member ? 1 : 0;
    if (witness_text) *witness_text = v.witness ? dup_string(witness_to_text(*v.witness)) : nullptr;
  });
}

int lpbc_catalog_list(char** out) {
  return guarded([&] {
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    std::string text;
    for (const CatalogEntry& e : theorem1_entries()) {
      const char* group = e.group == 1 ? "i" : (e.group == 2 ? "ii" : "iii");
      text += e.name;
      text += " group=" + std::string(group);
      text += " n=" + std::to_string(e.matroid.size());
      text += " r=" + std::to_string(e.matroid.rank());
      text += " bases=" + std::to_string(e.matroid.basis_count());
      text += "\n";
    }
    *out = dup_string(text);
  });
}

int lpbc_catalog_emit(const char* name, const char* rep, char** out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) fail(Errc::validation_error, "null argument");
    const CatalogEntry* entry = find_entry(name);
    if (entry == nullptr) fail(Errc::unknown_name, "no catalog entry named " + std::string(name));
    const std::string kind = rep == nullptr ? "matroid" : rep;
    if (kind == "matroid") {
      *out = dup_string(to_text(entry->matroid));
      return;
    }
    if (kind == "graph") {
      for (const Representation& r : entry->representations) {
        if (r.kind == Representation::bicircular_graph) {
          *out = dup_string(to_text(*r.graph));
          return;
        }
      }
      fail(Errc::unknown_name, std::string(name) + " has no bicircular graph representation");
    }
    if (kind == "lpm") {
      for (const Representation& r : entry->representations) {
        if (r.kind == Representation::lattice_path) {
          *out = dup_string(to_text(*r.lpm));
          return;
        }
      }
      fail(Errc::unknown_name, std::string(name) + " has no lattice path representation");
    }
    fail(Errc::bad_parameters, "unknown representation kind " + kind);
  });
}

int lpbc_corpus_lpm(int max_n, char** out) {
  return guarded([&] {
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    std::string text;
    for (const Matroid& m : enumerate_lpm_corpus(max_n)) {
      text += to_text(m);
      text += "\n";
    }
    *out = dup_string(text);
  });
}

int lpbc_corpus_graphs(int max_edges, int max_vertices, char** out) {
  return guarded([&] {
    if (out == nullptr) fail(Errc::validation_error, "null argument");
    std::string text;
    for (const Matroid& m : enumerate_bicircular_corpus(max_edges, max_vertices)) {
      text += to_text(m);
      text += "\n";
    }
    *out = dup_string(text);
  });
}

int lpbc_verify_theorem1(uint64_t node_budget, int max_elements, int lpm_corpus_max,
                         int graph_corpus_edges, int graph_corpus_vertices, char** report,
                         int* failures) {
  return guarded([&] {
    ClassifierConfig cfg;
    cfg.node_budget = node_budget;
    cfg.max_elements = max_elements;
    cfg.lpm_corpus_max = lpm_corpus_max;
    cfg.graph_corpus_edges = graph_corpus_edges;
    cfg.graph_corpus_vertices = graph_corpus_vertices;
    const Report r = verify_theorem1(cfg);
    if (report) *report = dup_string(r.to_text());
    if (failures) *failures = r.failures;
  });
}

}  // extern "C"
