#include "lpbc/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lpbc {

std::optional<Family> family_from_string(const std::string& name) {
  if (name == "P") return Family::P;
  if (name == "Pprime") return Family::Pprime;
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "C") return Family::C;
  if (name == "D") return Family::D;
  if (name == "E") return Family::E;
  return std::nullopt;
}

Matroid family_matroid(Family f, int n, int k) {
  switch (f) {
    case Family::P:
      if (n < 2) fail(Errc::bad_parameters, "P_n needs n >= 2");
      return truncate_to(direct_sum(uniform_matroid(n - 1, n), uniform_matroid(n - 1, n)), n);
    case Family::Pprime:
      if (n < 3) fail(Errc::bad_parameters, "P'_n needs n >= 3");
      return dual(free_extend(dual(family_matroid(Family::P, n - 1))));
    case Family::A:
      if (n < 3) fail(Errc::bad_parameters, "A_n needs n >= 3");
      return free_extend(family_matroid(Family::Pprime, n));
    case Family::B:
      if (!(n >= k && k >= 2)) fail(Errc::bad_parameters, "B_{n,k} needs n >= k >= 2");
      return truncate_to(
          direct_sum(direct_sum(uniform_matroid(n - 1, n), uniform_matroid(n - 1, n)),
                     uniform_matroid(k - 1, k)),
          n);
    case Family::C:
      if (!(n >= k && k >= 2)) fail(Errc::bad_parameters, "C_{n+k,k} needs n >= k >= 2");
      return dual(family_matroid(Family::B, n, k));
    case Family::D:
      if (n < 4) fail(Errc::bad_parameters, "D_n needs n >= 4");
      return free_extend(direct_sum(family_matroid(Family::P, n - 1), uniform_matroid(1, 1)));
    case Family::E:
      if (n < 4) fail(Errc::bad_parameters, "E_n needs n >= 4");
      return dual(family_matroid(Family::D, n));
  }
  fail(Errc::bad_parameters, "unknown family");
}

namespace {

MultiGraph graph_a3() {
  MultiGraph g;
  g.vertex_count = 3;
  g.edges = {GraphEdge::make_link(1, 2), GraphEdge::make_link(1, 2), GraphEdge::make_link(1, 3),
             GraphEdge::make_link(1, 3), GraphEdge::make_link(2, 3), GraphEdge::make_loop(1)};
  return g;
}

MultiGraph graph_b33() {
  MultiGraph g;
  g.vertex_count = 3;
  for (int rep = 0; rep < 3; ++rep) {
    g.edges.push_back(GraphEdge::make_link(1, 2));
    g.edges.push_back(GraphEdge::make_link(1, 3));
    g.edges.push_back(GraphEdge::make_link(2, 3));
  }
  return g;
}

MultiGraph graph_c42() {
  MultiGraph g;
  g.vertex_count = 4;
  g.edges = {GraphEdge::make_link(1, 4), GraphEdge::make_link(1, 4), GraphEdge::make_link(2, 4),
             GraphEdge::make_link(2, 4), GraphEdge::make_link(3, 4), GraphEdge::make_link(3, 4)};
  return g;
}

MultiGraph graph_c52() {
  MultiGraph g;
  g.vertex_count = 5;
  g.edges = {GraphEdge::make_link(2, 4), GraphEdge::make_link(2, 4), GraphEdge::make_link(3, 5),
             GraphEdge::make_link(3, 5), GraphEdge::make_link(4, 5), GraphEdge::make_link(2, 3),
             GraphEdge::make_link(1, 5), GraphEdge::make_link(1, 2)};
  return g;
}

MultiGraph graph_d4() {
  MultiGraph g;
  g.vertex_count = 4;
  g.edges = {GraphEdge::make_link(1, 2), GraphEdge::make_link(1, 2), GraphEdge::make_link(1, 2),
             GraphEdge::make_link(2, 3), GraphEdge::make_link(2, 3), GraphEdge::make_link(2, 3),
             GraphEdge::make_link(3, 4), GraphEdge::make_link(1, 4)};
  return g;
}

MultiGraph graph_whirl3() {
  MultiGraph g;
  g.vertex_count = 3;
  g.edges = {GraphEdge::make_link(1, 2), GraphEdge::make_link(1, 3), GraphEdge::make_link(2, 3),
             GraphEdge::make_loop(1), GraphEdge::make_loop(2), GraphEdge::make_loop(3)};
  return g;
}

MultiGraph graph_r3() {
  MultiGraph g;
  g.vertex_count = 3;
  g.edges = {GraphEdge::make_link(1, 2), GraphEdge::make_link(1, 3), GraphEdge::make_link(2, 3),
             GraphEdge::make_loop(2), GraphEdge::make_loop(2), GraphEdge::make_loop(3),
             GraphEdge::make_loop(3)};
  return g;
}

MultiGraph graph_r4() {
  MultiGraph g;
  g.vertex_count = 4;
  g.edges = {GraphEdge::make_link(1, 2), GraphEdge::make_link(1, 3), GraphEdge::make_link(2, 3),
             GraphEdge::make_link(3, 4), GraphEdge::make_link(3, 4), GraphEdge::make_loop(2),
             GraphEdge::make_loop(2)};
  return g;
}

LatticePathPresentation lpm_of(int east, int north, std::string lower, std::string upper) {
  LatticePathPresentation l{east, north, std::move(lower), std::move(upper)};
  validate(l);
  return l;
}

Matroid wheel3_matroid() { return cycle_matroid(complete_graph(4)); }

Matroid whirl3_matroid() {
  // Relax the first triangle of K_4; edge order (1,2),(1,3),(1,4),(2,3),...
  // makes {1,2,4} the triangle on vertices {1,2,3}.
  return relax_circuit_hyperplane(wheel3_matroid(), mask_of({1, 2, 4}));
}

Representation formula_rep(std::string label, Matroid m) {
  Representation r;
  r.kind = Representation::family_formula;
  r.label = std::move(label);
  r.matroid = std::move(m);
  return r;
}

Representation graph_rep(std::string label, MultiGraph g) {
  Representation r;
  r.kind = Representation::bicircular_graph;
  r.label = std::move(label);
  r.graph = std::move(g);
  return r;
}

Representation lpm_rep(std::string label, LatticePathPresentation l) {
  Representation r;
  r.kind = Representation::lattice_path;
  r.label = std::move(label);
  r.lpm = std::move(l);
  return r;
}

Representation note_rep(std::string label, std::string note) {
  Representation r;
  r.kind = Representation::geometric_note;
  r.label = std::move(label);
  r.note = std::move(note);
  return r;
}

CatalogEntry make_entry(std::string name, int group, Matroid m, std::vector<Representation> reps) {
  return CatalogEntry{std::move(name), group, std::move(m), std::move(reps)};
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;

  // Group (i): lattice path, not bicircular. Each carries its lattice path
  // presentation alongside the truncation formula.
  out.push_back(make_entry("U3_7", 1, uniform_matroid(3, 7),
                           {formula_rep("U_{3,7}", uniform_matroid(3, 7)),
                            lpm_rep("4x3 grid", lpm_of(4, 3, "EEEENNN", "NNNEEEE"))}));
  out.push_back(make_entry("U4_7", 1, uniform_matroid(4, 7),
                           {formula_rep("U_{4,7}", uniform_matroid(4, 7)),
                            lpm_rep("3x4 grid", lpm_of(3, 4, "EEENNNN", "NNNNEEE"))}));
  out.push_back(make_entry("U5_7", 1, uniform_matroid(5, 7),
                           {formula_rep("U_{5,7}", uniform_matroid(5, 7)),
                            lpm_rep("2x5 grid", lpm_of(2, 5, "EENNNNN", "NNNNNEE"))}));
  const Matroid t3_u12_u35 = truncate_to(direct_sum(uniform_matroid(1, 2), uniform_matroid(3, 5)), 3);
  out.push_back(make_entry("T3_U12_U35", 1, t3_u12_u35,
                           {formula_rep("T_3(U_{1,2}+U_{3,5})", t3_u12_u35),
                            lpm_rep("notched 4x3 region", lpm_of(4, 3, "EEEENNN", "NENNEEE"))}));
  const Matroid t3_u12_u12_u33 = truncate_to(
      direct_sum(direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2)), uniform_matroid(3, 3)), 3);
  out.push_back(make_entry("T3_U12_U12_U33", 1, t3_u12_u12_u33,
                           {formula_rep("T_3(U_{1,2}+U_{1,2}+U_{3,3})", t3_u12_u12_u33),
                            lpm_rep("staircase region", lpm_of(4, 3, "EEENNEN", "NENNEEE"))}));
  const Matroid t4_u12_u45 = truncate_to(direct_sum(uniform_matroid(1, 2), uniform_matroid(4, 5)), 4);
  out.push_back(make_entry("T4_U12_U45", 1, t4_u12_u45,
                           {formula_rep("T_4(U_{1,2}+U_{4,5})", t4_u12_u45),
                            lpm_rep("notched 3x4 region", lpm_of(3, 4, "EEENNNN", "NENNNEE"))}));
  const Matroid t4_u34_u33 = truncate_to(direct_sum(uniform_matroid(3, 4), uniform_matroid(3, 3)), 4);
  out.push_back(make_entry("T4_U34_U33", 1, t4_u34_u33,
                           {formula_rep("T_4(U_{3,4}+U_{3,3})", t4_u34_u33),
                            lpm_rep("notched 3x4 region", lpm_of(3, 4, "EEENNNN", "NNNENEE"))}));

  // Group (ii): bicircular, not lattice path. The reference graphs are the
  // authoritative source for R3 and R4.
  out.push_back(make_entry("A3", 2, family_matroid(Family::A, 3),
                           {formula_rep("P'_3+x", family_matroid(Family::A, 3)),
                            graph_rep("doubled triangle edges with loop", graph_a3())}));
  out.push_back(make_entry("B3_3", 2, family_matroid(Family::B, 3, 3),
                           {formula_rep("T_3(U_{2,3}+U_{2,3}+U_{2,3})", family_matroid(Family::B, 3, 3)),
                            graph_rep("tripled triangle", graph_b33())}));
  out.push_back(make_entry("C4_2", 2, family_matroid(Family::C, 2, 2),
                           {formula_rep("B_{2,2}*", family_matroid(Family::C, 2, 2)),
                            graph_rep("doubled 3-star", graph_c42())}));
  out.push_back(make_entry("C5_2", 2, family_matroid(Family::C, 3, 2),
                           {formula_rep("B_{3,2}*", family_matroid(Family::C, 3, 2)),
                            graph_rep("five-vertex graph with two doubled links", graph_c52())}));
  out.push_back(make_entry("D4", 2, family_matroid(Family::D, 4),
                           {formula_rep("(P_3+U_{1,1})+x", family_matroid(Family::D, 4)),
                            graph_rep("two tripled links closed by a path", graph_d4())}));
  out.push_back(make_entry("whirl3", 2, bicircular_matroid(graph_whirl3()),
                           {graph_rep("triangle with a loop at each vertex", graph_whirl3()),
                            formula_rep("relaxation of M(K_4)", whirl3_matroid())}));
  out.push_back(make_entry(
      "R3", 2, bicircular_matroid(graph_r3()),
      {graph_rep("triangle with two loops at two vertices", graph_r3()),
       note_rep("geometric", "5-element rank-2 flat holding two parallel pairs, plus two points off the line")}));
  out.push_back(make_entry(
      "R4", 2, bicircular_matroid(graph_r4()),
      {graph_rep("triangle, doubled pendant link, two loops", graph_r4()),
       note_rep("geometric", "two 4-element circuits meeting in one element, plus a parallel pair")}));

  // Group (iii): neither bicircular nor lattice path.
  out.push_back(make_entry("B2_2", 3, family_matroid(Family::B, 2, 2),
                           {formula_rep("T_2(U_{1,2}+U_{1,2}+U_{1,2})", family_matroid(Family::B, 2, 2)),
                            note_rep("geometric", "three doubled points on a line")}));
  out.push_back(make_entry("B3_2", 3, family_matroid(Family::B, 3, 2),
                           {formula_rep("T_3(U_{2,3}+U_{2,3}+U_{1,2})", family_matroid(Family::B, 3, 2))}));
  out.push_back(make_entry("E4", 3, family_matroid(Family::E, 4),
                           {formula_rep("D_4*", family_matroid(Family::E, 4))}));
  out.push_back(make_entry("wheel3", 3, wheel3_matroid(),
                           {formula_rep("M(K_4)", wheel3_matroid()),
                            note_rep("geometric", "triangle of three 3-point lines")}));
  return out;
}

}  // namespace

MultiGraph catalog_graph(const std::string& name) {
  if (name == "A3") return graph_a3();
  if (name == "B3_3") return graph_b33();
  if (name == "C4_2") return graph_c42();
  if (name == "C5_2") return graph_c52();
  if (name == "D4") return graph_d4();
  if (name == "whirl3") return graph_whirl3();
  if (name == "R3") return graph_r3();
  if (name == "R4") return graph_r4();
  fail(Errc::unknown_name, "no catalog graph named " + name);
}

std::vector<std::string> catalog_graph_names() {
  return {"A3", "B3_3", "C4_2", "C5_2", "D4", "whirl3", "R3", "R4"};
}

const std::vector<CatalogEntry>& theorem1_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const CatalogEntry& e : theorem1_entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const std::vector<std::pair<std::string, Matroid>>& lattice_path_excluded_minors(int max_elements) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<std::string, Matroid>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_elements);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<std::string, Matroid>> list;
  auto add = [&](const std::string& name, const Matroid& m) {
    if (m.size() <= max_elements) list.emplace_back(name, m);
  };
  add("wheel3", wheel3_matroid());
  add("whirl3", bicircular_matroid(graph_whirl3()));
  add("R3", bicircular_matroid(graph_r3()));
  add("R4", bicircular_matroid(graph_r4()));
  for (int n = 3; 2 * n <= max_elements; ++n)
    add("A" + std::to_string(n), family_matroid(Family::A, n));
  for (int n = 2; n <= max_elements; ++n) {
    for (int k = 2; k <= n && 2 * n + k <= max_elements; ++k) {
      add("B" + std::to_string(n) + "_" + std::to_string(k), family_matroid(Family::B, n, k));
      add("C" + std::to_string(n + k) + "_" + std::to_string(k), family_matroid(Family::C, n, k));
    }
  }
  for (int n = 4; 2 * n <= max_elements; ++n) {
    add("D" + std::to_string(n), family_matroid(Family::D, n));
    add("E" + std::to_string(n), family_matroid(Family::E, n));
  }
  std::stable_sort(list.begin(), list.end(),
                   [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  return cache.emplace(max_elements, std::move(list)).first->second;
}

}  // namespace lpbc
