#include "lpbc/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace lpbc {

Verdict member_theorem1(const Matroid& m, const ClassifierConfig& cfg) {
  if (m.size() > cfg.max_elements)
    fail(Errc::ground_set_too_large, "membership decision capped at " + std::to_string(cfg.max_elements) + " elements");
  Budget budget{cfg.node_budget, 0};
  Verdict v;
  v.method = Verdict::theorem1;

  std::vector<const CatalogEntry*> candidates;
  for (const CatalogEntry& e : theorem1_entries()) {
    if (e.matroid.size() <= m.size()) candidates.push_back(&e);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CatalogEntry* a, const CatalogEntry* b) {
                     return a->matroid.size() < b->matroid.size();
                   });
  for (const CatalogEntry* e : candidates) {
    if (auto w = find_minor(m, e->matroid, budget)) {
      w->target_name = e->name;
      v.member = false;
      v.witness = std::move(w);
      v.nodes_used = budget.used;
      return v;
    }
  }
  v.member = true;
  v.nodes_used = budget.used;
  return v;
}

Verdict member_direct(const Matroid& m, const ClassifierConfig& cfg) {
  if (m.size() > cfg.max_elements)
    fail(Errc::ground_set_too_large, "membership decision capped at " + std::to_string(cfg.max_elements) + " elements");
  Budget budget{cfg.node_budget, 0};
  Verdict v;
  v.method = Verdict::direct;
  LatticePathDecision lp = is_lattice_path(m, budget, cfg.max_elements);
  v.lattice_path_side = lp.is_member;
  if (!lp.is_member) v.witness = std::move(lp.witness);
  v.representation = find_bicircular_representation(m, budget);
  v.bicircular_side = v.representation.has_value();
  v.member = v.lattice_path_side && v.bicircular_side;
  v.nodes_used = budget.used;
  return v;
}

namespace {

// Deduplicates a stream of matroids by isomorphism, bucketing on the
// invariant profile; keeps the first representative in arrival order.
struct IsoDedup {
  std::unordered_map<std::string, std::vector<int>> buckets;
  std::vector<Matroid> kept;

  bool insert(const Matroid& m) {
    Budget budget;  // profile-bucketed isomorphism checks stay tiny
    const std::string key = invariant_profile(m).key();
    auto& bucket = buckets[key];
    for (int idx : bucket) {
      if (find_isomorphism(kept[idx], m, budget)) return false;
    }
    bucket.push_back(static_cast<int>(kept.size()));
    kept.push_back(m);
    return true;
  }
};

void enumerate_monotone_paths(int east, int north, std::string& acc, std::vector<std::string>* out) {
  if (east == 0 && north == 0) {
    out->push_back(acc);
    return;
  }
  if (east > 0) {
    acc.push_back('E');
    enumerate_monotone_paths(east - 1, north, acc, out);
    acc.pop_back();
  }
  if (north > 0) {
    acc.push_back('N');
    enumerate_monotone_paths(east, north - 1, acc, out);
    acc.pop_back();
  }
}

bool path_weakly_below(const std::string& lower, const std::string& upper) {
  int ln = 0, un = 0;
  for (std::size_t t = 0; t < lower.size(); ++t) {
    ln += lower[t] == 'N';
    un += upper[t] == 'N';
    if (ln > un) return false;
  }
  return true;
}

}  // namespace

std::vector<Matroid> enumerate_lpm_corpus(int max_n) {
  if (max_n > 10) fail(Errc::bad_parameters, "lattice path corpus capped at m+r <= 10");
  IsoDedup dedup;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 0; r <= n; ++r) {
      const int m = n - r;
      std::vector<std::string> paths;
      std::string acc;
      enumerate_monotone_paths(m, r, acc, &paths);
      std::sort(paths.begin(), paths.end());
      for (const std::string& lower : paths) {
        for (const std::string& upper : paths) {
          if (!path_weakly_below(lower, upper)) continue;
          dedup.insert(matroid_of_lpm(LatticePathPresentation{m, r, lower, upper}));
        }
      }
    }
  }
  return std::move(dedup.kept);
}

namespace {

// Edge slots over a fixed vertex set, in the canonical order free, loops by
// vertex, links lexicographic.
std::vector<GraphEdge> slot_universe(int vertices) {
  std::vector<GraphEdge> slots;
  slots.push_back(GraphEdge::make_free());
  for (int v = 1; v <= vertices; ++v) slots.push_back(GraphEdge::make_loop(v));
  for (int a = 1; a <= vertices; ++a) {
    for (int b = a + 1; b <= vertices; ++b) slots.push_back(GraphEdge::make_link(a, b));
  }
  return slots;
}

int permuted_slot_index(const std::vector<GraphEdge>& slots, const GraphEdge& e,
                        const std::vector<int>& vperm) {
  GraphEdge img = e;
  if (e.kind == GraphEdge::loop) {
    img = GraphEdge::make_loop(vperm[e.a - 1]);
  } else if (e.kind == GraphEdge::link) {
    img = GraphEdge::make_link(vperm[e.a - 1], vperm[e.b - 1]);
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] == img) return static_cast<int>(i);
  }
  return -1;
}

void enumerate_slot_multisets(int pool, int size, int from, std::vector<int>& acc,
                              std::vector<std::vector<int>>* out) {
  if (size == 0) {
    out->push_back(acc);
    return;
  }
  for (int i = from; i < pool; ++i) {
    acc.push_back(i);
    enumerate_slot_multisets(pool, size - 1, i, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Matroid> enumerate_bicircular_corpus(int max_edges, int max_vertices) {
  if (max_edges > 8 || max_vertices > 5)
    fail(Errc::bad_parameters, "bicircular corpus capped at 8 edges on 5 vertices");
  const std::vector<GraphEdge> slots = slot_universe(max_vertices);
  std::vector<std::vector<int>> vperms;
  std::vector<int> base(max_vertices);
  for (int v = 0; v < max_vertices; ++v) base[v] = v + 1;
  do {
    vperms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  IsoDedup dedup;
  for (int e = 1; e <= max_edges; ++e) {
    std::vector<std::vector<int>> multisets;
    std::vector<int> acc;
    enumerate_slot_multisets(static_cast<int>(slots.size()), e, 0, acc, &multisets);
    for (const auto& ms : multisets) {
      bool canonical = true;
      for (const auto& perm : vperms) {
        std::vector<int> image;
        image.reserve(ms.size());
        for (int idx : ms) image.push_back(permuted_slot_index(slots, slots[idx], perm));
        std::sort(image.begin(), image.end());
        if (image < ms) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      MultiGraph g;
      g.vertex_count = max_vertices;
      for (int idx : ms) g.edges.push_back(slots[idx]);
      dedup.insert(bicircular_matroid(g));
    }
  }
  return std::move(dedup.kept);
}

std::string Report::to_text() const {
  std::ostringstream ss;
  for (const ReportLine& line : lines) {
    ss << (line.pass ? "PASS" : "FAIL") << ' ' << line.check_id << ' ' << line.subject;
    if (!line.witness.empty()) ss << ' ' << line.witness;
    ss << '\n';
  }
  ss << "checks " << lines.size() << " failures " << failures << '\n';
  return ss.str();
}

namespace {

void add_line(Report* report, bool pass, std::string check_id, std::string subject,
              std::string witness = "") {
  report->lines.push_back(ReportLine{pass, std::move(check_id), std::move(subject), std::move(witness)});
  if (!report->lines.back().pass) report->failures += 1;
}

}  // namespace

namespace {

// A false verdict must carry a witness that replays exactly.
bool witness_ok(const Matroid& subject, const Verdict& v) {
  if (v.member || !v.witness.has_value()) return !v.witness.has_value();
  const CatalogEntry* target = find_entry(v.witness->target_name);
  return target != nullptr && witness_replays(subject, *v.witness, target->matroid);
}

}  // namespace

Report verify_theorem1(const ClassifierConfig& cfg) {
  Report report;
  for (const CatalogEntry& entry : theorem1_entries()) {
    const Verdict direct = member_direct(entry.matroid, cfg);
    add_line(&report, !direct.member, "entry-nonmember", entry.name,
             direct.witness ? direct.witness->target_name : "");
    bool pattern = false;
    switch (entry.group) {
      case 1: pattern = direct.lattice_path_side && !direct.bicircular_side; break;
      case 2: pattern = !direct.lattice_path_side && direct.bicircular_side; break;
      case 3: pattern = !direct.lattice_path_side && !direct.bicircular_side; break;
    }
    add_line(&report, pattern, "entry-pattern", entry.name);
    const Verdict t1 = member_theorem1(entry.matroid, cfg);
    add_line(&report, !t1.member && t1.witness && t1.witness->target_name == entry.name,
             "entry-self-witness", entry.name, t1.witness ? t1.witness->target_name : "");
    add_line(&report, witness_ok(entry.matroid, t1) && witness_ok(entry.matroid, direct),
             "entry-witness-replay", entry.name);

    for (int e = 1; e <= entry.matroid.size(); ++e) {
      const Matroid deletion = minor(entry.matroid, 0, element_bit(e));
      const Matroid contraction = minor(entry.matroid, element_bit(e), 0);
      const std::string del_ref = entry.name + ".del" + std::to_string(e);
      const std::string con_ref = entry.name + ".con" + std::to_string(e);
      const Verdict dd = member_direct(deletion, cfg);
      const Verdict dt = member_theorem1(deletion, cfg);
      add_line(&report, dd.member, "minor-direct", del_ref,
               dd.witness ? dd.witness->target_name : "");
      add_line(&report, dt.member, "minor-theorem1", del_ref,
               dt.witness ? dt.witness->target_name : "");
      const Verdict cd = member_direct(contraction, cfg);
      const Verdict ct = member_theorem1(contraction, cfg);
      add_line(&report, cd.member, "minor-direct", con_ref,
               cd.witness ? cd.witness->target_name : "");
      add_line(&report, ct.member, "minor-theorem1", con_ref,
               ct.witness ? ct.witness->target_name : "");
    }
  }

  const std::vector<Matroid> lpm_corpus = enumerate_lpm_corpus(cfg.lpm_corpus_max);
  for (std::size_t i = 0; i < lpm_corpus.size(); ++i) {
    const Verdict t1 = member_theorem1(lpm_corpus[i], cfg);
    const Verdict direct = member_direct(lpm_corpus[i], cfg);
    add_line(&report, t1.member == direct.member && witness_ok(lpm_corpus[i], t1), "bicond-lpm",
             "lpm#" + std::to_string(i), t1.witness ? t1.witness->target_name : "");
  }
  const std::vector<Matroid> graph_corpus =
      enumerate_bicircular_corpus(cfg.graph_corpus_edges, cfg.graph_corpus_vertices);
  for (std::size_t i = 0; i < graph_corpus.size(); ++i) {
    const Verdict t1 = member_theorem1(graph_corpus[i], cfg);
    const Verdict direct = member_direct(graph_corpus[i], cfg);
    add_line(&report, t1.member == direct.member && witness_ok(graph_corpus[i], t1), "bicond-graph",
             "graph#" + std::to_string(i), t1.witness ? t1.witness->target_name : "");
  }
  return report;
}

}  // namespace lpbc
