#include "lpbc/bicircular.hpp"

#include <algorithm>
#include <array>

namespace lpbc {

int girth(const Matroid& m) {
  const std::vector<Mask> circs = circuits(m);
  if (circs.empty()) fail(Errc::no_circuit, "free matroid has no circuit");
  int best = m.size() + 1;
  for (Mask c : circs) best = std::min(best, popcount(c));
  return best;
}

bool check_size_bound(const Matroid& m) {
  const int g = girth(m);
  if (g < 4) fail(Errc::girth_too_small, "size bound needs girth >= 4, got " + std::to_string(g));
  const int k = g - 1;
  const int r = m.rank();
  return static_cast<long>(m.size()) * (k - 2) <= static_cast<long>(r) * (r - 1);
}

namespace {

struct Slot {
  int a = 0, b = 0;  // loop: a == b; link: a < b
  bool is_loop() const { return a == b; }
};

// Backtracking assignment of the non-loop elements of M to loop/link slots
// on at most r vertices. Vertices are introduced in increasing order, which
// canonicalizes away vertex symmetry. Soundness of pruning: the ranks of
// assigned subsets never change as further elements are placed, so any
// mismatch against M on pairs, triples or the full prefix is final.
struct SlotSearch {
  const Matroid& m;
  Budget& budget;
  int max_vertices = 0;
  std::vector<int> order;          // elements to place, increasing
  std::vector<Slot> slot_of;       // parallel to order
  std::vector<Mask> prefix_masks;  // prefix element sets

  int find(std::array<int, 18>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Rank of the subgraph on the first `depth` placed edges plus candidate.
  int graph_rank(int depth, const Slot& cand) const {
    std::array<int, 18> parent;
    for (int v = 0; v <= max_vertices; ++v) parent[v] = v;
    std::array<int, 18> edges{}, verts{};
    std::array<bool, 18> touched{};
    auto feed = [&](const Slot& s) {
      touched[s.a] = touched[s.b] = true;
      if (!s.is_loop()) {
        int ra = find(parent, s.a), rb = find(parent, s.b);
        if (ra != rb) parent[rb] = ra;
      }
    };
    for (int i = 0; i < depth; ++i) feed(slot_of[i]);
    feed(cand);
    for (int v = 1; v <= max_vertices; ++v) {
      if (touched[v]) verts[find(parent, v)]++;
    }
    for (int i = 0; i < depth; ++i) edges[find(parent, slot_of[i].a)]++;
    edges[find(parent, cand.a)]++;
    int rank = 0;
    for (int v = 1; v <= max_vertices; ++v) {
      if (find(parent, v) == v && verts[v] > 0) rank += std::min(edges[v], verts[v]);
    }
    return rank;
  }

  // Rank in the graph of an arbitrary subset of placed elements (small).
  int subset_graph_rank(const std::vector<Slot>& slots) const {
    std::array<int, 18> parent;
    for (int v = 0; v <= max_vertices; ++v) parent[v] = v;
    std::array<int, 18> edges{}, verts{};
    std::array<bool, 18> touched{};
    for (const Slot& s : slots) {
      touched[s.a] = touched[s.b] = true;
      if (!s.is_loop()) {
        int ra = find(parent, s.a), rb = find(parent, s.b);
        if (ra != rb) parent[rb] = ra;
      }
    }
    for (int v = 1; v <= max_vertices; ++v) {
      if (touched[v]) verts[find(parent, v)]++;
    }
    for (const Slot& s : slots) edges[find(parent, s.a)]++;
    int rank = 0;
    for (int v = 1; v <= max_vertices; ++v) {
      if (find(parent, v) == v && verts[v] > 0) rank += std::min(edges[v], verts[v]);
    }
    return rank;
  }

  bool feasible(int depth, const Slot& cand) {
    const int e = order[depth];
    const Mask prefix = (depth == 0 ? 0 : prefix_masks[depth - 1]) | element_bit(e);
    // Pairs: a 2-circuit in B(G) is exactly a pair of loops at one vertex.
    for (int i = 0; i < depth; ++i) {
      const bool graph_parallel =
          cand.is_loop() && slot_of[i].is_loop() && cand.a == slot_of[i].a;
      const bool matroid_parallel =
          m.rank_of(element_bit(order[i]) | element_bit(e)) <= 1;
      if (graph_parallel != matroid_parallel) return false;
    }
    if (graph_rank(depth, cand) != m.rank_of(prefix)) return false;
    for (int i = 0; i < depth; ++i) {
      for (int j = i + 1; j < depth; ++j) {
        const int mr = m.rank_of(element_bit(order[i]) | element_bit(order[j]) | element_bit(e));
        if (subset_graph_rank({slot_of[i], slot_of[j], cand}) != mr) return false;
      }
    }
    return true;
  }

  std::optional<MultiGraph> assign(int depth, int vertices_used) {
    if (depth == static_cast<int>(order.size())) return materialize();
    const int cap = std::min(max_vertices, vertices_used + 2);
    // Loop slots on used vertices plus one fresh vertex.
    for (int v = 1; v <= std::min(max_vertices, vertices_used + 1); ++v) {
      budget.charge();
      Slot cand{v, v};
      if (feasible(depth, cand)) {
        slot_of[depth] = cand;
        prefix_masks[depth] = (depth == 0 ? 0 : prefix_masks[depth - 1]) | element_bit(order[depth]);
        if (auto g = assign(depth + 1, std::max(vertices_used, v))) return g;
      }
    }
    // Link slots; at most the next one or two fresh vertices.
    for (int a = 1; a <= cap; ++a) {
      for (int b = a + 1; b <= cap; ++b) {
        if (b > vertices_used + 1 && !(a == vertices_used + 1 && b == vertices_used + 2)) continue;
        budget.charge();
        Slot cand{a, b};
        if (feasible(depth, cand)) {
          slot_of[depth] = cand;
          prefix_masks[depth] = (depth == 0 ? 0 : prefix_masks[depth - 1]) | element_bit(order[depth]);
          if (auto g = assign(depth + 1, std::max(vertices_used, b))) return g;
        }
      }
    }
    return std::nullopt;
  }

  std::optional<MultiGraph> materialize() const {
    MultiGraph g;
    int used = 0;
    for (const Slot& s : slot_of) used = std::max(used, s.b);
    g.vertex_count = used;
    g.edges.assign(m.size(), GraphEdge::make_free());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Slot& s = slot_of[i];
      g.edges[order[i] - 1] = s.is_loop() ? GraphEdge::make_loop(s.a) : GraphEdge::make_link(s.a, s.b);
    }
    if (bicircular_matroid(g) == m) return g;
    return std::nullopt;
  }
};

}  // namespace

std::optional<MultiGraph> find_bicircular_representation(const Matroid& m, Budget& budget) {
  const Mask matroid_loops = m.loops();
  if (m.rank() == 0) {
    MultiGraph g;
    g.vertex_count = 0;
    g.edges.assign(m.size(), GraphEdge::make_free());
    return g;
  }
  // Fast necessary condition: the simplex packing bound on element count.
  if (m.size() > m.rank() && girth(m) >= 4 && !check_size_bound(m)) return std::nullopt;
  SlotSearch search{m, budget, m.rank(), {}, {}, {}};
  for (int e = 1; e <= m.size(); ++e) {
    if (!(matroid_loops & element_bit(e))) search.order.push_back(e);
  }
  search.slot_of.resize(search.order.size());
  search.prefix_masks.resize(search.order.size());
  return search.assign(0, 0);
}

bool is_bicircular(const Matroid& m, Budget& budget) {
  return find_bicircular_representation(m, budget).has_value();
}

}  // namespace lpbc
