#include "lpbc/multigraph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lpbc {

GraphEdge GraphEdge::make_link(int u, int v) {
  if (u == v) fail(Errc::validation_error, "link endpoints must differ");
  if (u > v) std::swap(u, v);
  return GraphEdge{link, u, v};
}

GraphEdge GraphEdge::make_loop(int v) { return GraphEdge{loop, v, v}; }

GraphEdge GraphEdge::make_free() { return GraphEdge{free_edge, 0, 0}; }

void validate(const MultiGraph& g) {
  if (g.vertex_count < 0) fail(Errc::validation_error, "negative vertex count");
  if (g.vertex_count > kMaxGroundSetSize)
    fail(Errc::ground_set_too_large, "graph has more than " + std::to_string(kMaxGroundSetSize) + " vertices");
  if (g.edge_count() > kMaxGroundSetSize)
    fail(Errc::ground_set_too_large, "graph has more than " + std::to_string(kMaxGroundSetSize) + " edges");
  for (const GraphEdge& e : g.edges) {
    switch (e.kind) {
      case GraphEdge::link:
        if (e.a < 1 || e.b < 1 || e.a > g.vertex_count || e.b > g.vertex_count || e.a == e.b)
          fail(Errc::validation_error, "link endpoints outside 1.." + std::to_string(g.vertex_count));
        break;
      case GraphEdge::loop:
        if (e.a < 1 || e.a > g.vertex_count)
          fail(Errc::validation_error, "loop vertex outside 1.." + std::to_string(g.vertex_count));
        break;
      case GraphEdge::free_edge:
        break;
    }
  }
}

namespace {

struct Dsu {
  std::array<int, 18> parent;
  void init(int n) { std::iota(parent.begin(), parent.begin() + n + 1, 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

struct ComponentStats {
  bool has_free = false;
  bool overloaded = false;  // some component with more edges than vertices
  int rank = 0;             // sum over components of min(edges, vertices)
};

ComponentStats scan_components(const MultiGraph& g, Mask edge_set) {
  ComponentStats st;
  Dsu dsu;
  dsu.init(g.vertex_count);
  std::array<int, 18> edge_cnt{};
  std::array<int, 18> vert_cnt{};
  std::array<bool, 18> touched{};
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(edge_set & element_bit(i + 1))) continue;
    const GraphEdge& e = g.edges[i];
    if (e.kind == GraphEdge::free_edge) {
      st.has_free = true;
      continue;
    }
    touched[e.a] = touched[e.b] = true;
    if (e.kind == GraphEdge::link) dsu.unite(e.a, e.b);
  }
  for (int v = 1; v <= g.vertex_count; ++v) {
    if (touched[v]) vert_cnt[dsu.find(v)]++;
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(edge_set & element_bit(i + 1))) continue;
    const GraphEdge& e = g.edges[i];
    if (e.kind != GraphEdge::free_edge) edge_cnt[dsu.find(e.a)]++;
  }
  for (int v = 1; v <= g.vertex_count; ++v) {
    if (dsu.find(v) != v || vert_cnt[v] == 0) continue;
    if (edge_cnt[v] > vert_cnt[v]) st.overloaded = true;
    st.rank += std::min(edge_cnt[v], vert_cnt[v]);
  }
  return st;
}

}  // namespace

bool bicircular_independent(const MultiGraph& g, Mask edge_set) {
  ComponentStats st = scan_components(g, edge_set);
  return !st.has_free && !st.overloaded;
}

int bicircular_rank(const MultiGraph& g, Mask edge_set) { return scan_components(g, edge_set).rank; }

Matroid bicircular_matroid(const MultiGraph& g) {
  validate(g);
  const int n = g.edge_count();
  const int r = bicircular_rank(g, full_mask(n));
  std::vector<Mask> bases;
  for (Mask x = 0;; ++x) {
    if (popcount(x) == r && bicircular_independent(g, x)) bases.push_back(x);
    if (x == full_mask(n)) break;
  }
  return Matroid::trusted(n, std::move(bases));
}

Matroid cycle_matroid(const MultiGraph& g) {
  validate(g);
  for (const GraphEdge& e : g.edges) {
    if (e.kind == GraphEdge::free_edge) fail(Errc::has_free_edge, "cycle matroid of a graph with a free edge");
  }
  const int n = g.edge_count();
  // Forest rank: vertices touched minus components, over non-loop edges.
  auto forest = [&](Mask edge_set, int* out_rank) {
    Dsu dsu;
    dsu.init(g.vertex_count);
    int rank = 0;
    bool acyclic = true;
    for (int i = 0; i < n; ++i) {
      if (!(edge_set & element_bit(i + 1))) continue;
      const GraphEdge& e = g.edges[i];
      if (e.kind == GraphEdge::loop || !dsu.unite(e.a, e.b)) {
        acyclic = false;
      } else {
        ++rank;
      }
    }
    *out_rank = rank;
    return acyclic;
  };
  int r = 0;
  forest(full_mask(n), &r);
  std::vector<Mask> bases;
  for (Mask x = 0;; ++x) {
    int dummy = 0;
    if (popcount(x) == r && forest(x, &dummy)) bases.push_back(x);
    if (x == full_mask(n)) break;
  }
  return Matroid::trusted(n, std::move(bases));
}

MultiGraph delete_edge(const MultiGraph& g, int edge) {
  if (edge < 1 || edge > g.edge_count()) fail(Errc::validation_error, "edge index out of range");
  MultiGraph out = g;
  out.edges.erase(out.edges.begin() + (edge - 1));
  return out;
}

MultiGraph contract_edge(const MultiGraph& g, int edge) {
  if (edge < 1 || edge > g.edge_count()) fail(Errc::validation_error, "edge index out of range");
  const GraphEdge target = g.edges[edge - 1];
  MultiGraph out;
  out.vertex_count = g.vertex_count;
  if (target.kind == GraphEdge::free_edge) return delete_edge(g, edge);

  // Vertex relabeling after the contraction. For a link, b merges into a;
  // for a loop, its vertex disappears.
  std::vector<int> remap(g.vertex_count + 1, 0);
  int next = 0;
  for (int v = 1; v <= g.vertex_count; ++v) {
    if (target.kind == GraphEdge::loop && v == target.a) continue;
    if (target.kind == GraphEdge::link && v == target.b) continue;
    remap[v] = ++next;
  }
  if (target.kind == GraphEdge::link) remap[target.b] = remap[target.a];
  out.vertex_count = next;

  for (int i = 0; i < g.edge_count(); ++i) {
    if (i == edge - 1) continue;
    const GraphEdge& e = g.edges[i];
    if (e.kind == GraphEdge::free_edge) {
      out.edges.push_back(e);
      continue;
    }
    if (target.kind == GraphEdge::link) {
      int a = remap[e.a], b = remap[e.b];
      if (e.kind == GraphEdge::loop) {
        out.edges.push_back(GraphEdge::make_loop(a));
      } else if (a == b) {
        out.edges.push_back(GraphEdge::make_loop(a));
      } else {
        out.edges.push_back(GraphEdge::make_link(a, b));
      }
    } else {  // contracting a loop at vertex v = target.a
      if (e.kind == GraphEdge::loop) {
        if (e.a == target.a) {
          out.edges.push_back(GraphEdge::make_free());
        } else {
          out.edges.push_back(GraphEdge::make_loop(remap[e.a]));
        }
      } else {
        if (e.a == target.a) {
          out.edges.push_back(GraphEdge::make_loop(remap[e.b]));
        } else if (e.b == target.a) {
          out.edges.push_back(GraphEdge::make_loop(remap[e.a]));
        } else {
          out.edges.push_back(GraphEdge::make_link(remap[e.a], remap[e.b]));
        }
      }
    }
  }
  return out;
}

MultiGraph complete_graph(int vertices) {
  MultiGraph g;
  g.vertex_count = vertices;
  for (int u = 1; u <= vertices; ++u) {
    for (int v = u + 1; v <= vertices; ++v) g.edges.push_back(GraphEdge::make_link(u, v));
  }
  return g;
}

}  // namespace lpbc
