#pragma once

#include <string>
#include <vector>

#include "lpbc/matroid.hpp"

namespace lpbc {

// A multigraph whose edge set may contain links, loops and free edges
// (edges incident to no vertex). Edge identity is the position in the
// edge list, 1-based, matching matroid element labels.
struct GraphEdge {
  enum Kind { link, loop, free_edge };
  Kind kind = free_edge;
  int a = 0;  // link: a < b; loop: a == b == vertex; free: 0
  int b = 0;

  static GraphEdge make_link(int u, int v);
  static GraphEdge make_loop(int v);
  static GraphEdge make_free();

  bool operator==(const GraphEdge& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

struct MultiGraph {
  int vertex_count = 0;
  std::vector<GraphEdge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const MultiGraph& o) const {
    return vertex_count == o.vertex_count && edges == o.edges;
  }
};

void validate(const MultiGraph& g);

// Independence in the bicircular sense: no free edge, and every connected
// component of the chosen subgraph has at most one cycle.
bool bicircular_independent(const MultiGraph& g, Mask edge_set);
int bicircular_rank(const MultiGraph& g, Mask edge_set);
Matroid bicircular_matroid(const MultiGraph& g);

// Graphic (cycle) matroid; rejects graphs with free edges.
Matroid cycle_matroid(const MultiGraph& g);

// Graph-side minor rules. Deletion is exact. Contraction follows the
// standard bicircular rules (link: identify endpoints; loop at v: drop v,
// links at v become loops, other loops at v become free; free edge:
// deletion). Tests validate these against matroid-side contraction, which
// is the source of truth.
MultiGraph delete_edge(const MultiGraph& g, int edge);
MultiGraph contract_edge(const MultiGraph& g, int edge);

MultiGraph complete_graph(int vertices);

}  // namespace lpbc
