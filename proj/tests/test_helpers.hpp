#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "lpbc/matroid.hpp"
#include "lpbc/multigraph.hpp"

namespace lpbc::testing {

// Direct scan of the exchange axiom, independent of Matroid's validator.
// Returns a violating (A, a, B) triple if one exists.
struct ExchangeViolationCase {
  Mask basis_a = 0;
  int element = 0;
  Mask basis_b = 0;
};

inline std::optional<ExchangeViolationCase> scan_exchange(const std::vector<Mask>& bases) {
  for (Mask a : bases) {
    for (Mask b : bases) {
      if (a == b) continue;
      for (int x : elements_of(a & ~b)) {
        bool ok = false;
        for (int y : elements_of(b & ~a)) {
          const Mask swapped = (a & ~element_bit(x)) | element_bit(y);
          if (std::find(bases.begin(), bases.end(), swapped) != bases.end()) {
            ok = true;
            break;
          }
        }
        if (!ok) return ExchangeViolationCase{a, x, b};
      }
    }
  }
  return std::nullopt;
}

// Brute-force rank: size of the largest subset of x contained in a basis.
inline int naive_rank(const Matroid& m, Mask x) {
  int best = 0;
  for (Mask b : m.bases()) best = std::max(best, popcount(b & x));
  return best;
}

// Test-side classification of a subgraph as a theta graph, tight handcuff
// or loose handcuff (all as subdivisions), used as the circuit-shape oracle.
// The subgraph is connected with exactly two independent cycles iff
// edges = vertices + 1, every vertex has degree >= 2 (after accounting for
// loops), and it is connected.
inline bool induces_bicircular_shape(const MultiGraph& g, Mask edge_set) {
  std::vector<int> degree(g.vertex_count + 1, 0);
  std::vector<int> parent(g.vertex_count + 1);
  for (int v = 0; v <= g.vertex_count; ++v) parent[v] = v;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int edges = 0;
  std::vector<int> touched;
  for (int i = 1; i <= g.edge_count(); ++i) {
    if (!(edge_set & element_bit(i))) continue;
    const GraphEdge& e = g.edges[i - 1];
    if (e.kind == GraphEdge::free_edge) return false;
    ++edges;
    degree[e.a] += 1;
    degree[e.b] += 1;
    touched.push_back(e.a);
    touched.push_back(e.b);
    if (e.kind == GraphEdge::link) parent[find(e.a)] = find(e.b);
  }
  if (edges == 0) return false;
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  const int root = find(touched[0]);
  for (int v : touched) {
    if (find(v) != root) return false;  // disconnected
  }
  if (edges != static_cast<int>(touched.size()) + 1) return false;
  for (int v : touched) {
    if (degree[v] < 2) return false;  // a pendant edge is never in a circuit
  }
  return true;
}

}  // namespace lpbc::testing
