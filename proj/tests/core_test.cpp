#include <algorithm>
#include <random>

#include "doctest.h"
#include "lpbc/catalog.hpp"
#include "lpbc/classifier.hpp"
#include "lpbc/isomin.hpp"
#include "lpbc/matroid.hpp"
#include "lpbc/multigraph.hpp"
#include "test_helpers.hpp"

using namespace lpbc;

TEST_CASE("from_bases accepts uniform matroids") {
  const Matroid u23 = Matroid::from_bases(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(u23 == uniform_matroid(2, 3));
  const Matroid u12 = Matroid::from_bases(2, {{1}, {2}});
  CHECK(u12 == uniform_matroid(1, 2));
}

TEST_CASE("from_bases rejects non-uniform basis sizes") {
  CHECK_THROWS_WITH_AS(Matroid::from_bases(3, {{1, 2}, {3}}), doctest::Contains("different sizes"),
                       Error);
}

TEST_CASE("exchange holds for {12,23}: the parallel-pair matroid") {
  // Both swaps succeed under the axiom scan, so this family is accepted; it
  // is the rank-2 matroid in which 1 and 3 are parallel.
  const std::vector<Mask> family = {mask_of({1, 2}), mask_of({2, 3})};
  CHECK_FALSE(testing::scan_exchange(family).has_value());
  const Matroid m = Matroid::from_basis_masks(3, family);
  CHECK(m.rank() == 2);
  CHECK(circuits(m) == std::vector<Mask>{mask_of({1, 3})});
}

TEST_CASE("from_bases reports an exchange violation") {
  const std::vector<Mask> bad = {mask_of({1, 2}), mask_of({3, 4})};
  const auto violation = testing::scan_exchange(bad);
  REQUIRE(violation.has_value());
  CHECK(violation->basis_a == mask_of({1, 2}));
  CHECK(violation->element == 1);
  CHECK(violation->basis_b == mask_of({3, 4}));
  try {
    Matroid::from_basis_masks(4, bad);
    FAIL("expected ExchangeViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::exchange_violation);
    CHECK(std::string(e.what()).find("A={1 2}") != std::string::npos);
    CHECK(std::string(e.what()).find("a=1") != std::string::npos);
  }
}

TEST_CASE("rank_of on uniform matroids") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(rank_of(u23, mask_of({1})) == 1);
  CHECK(rank_of(u23, 0) == 0);
  CHECK(rank_of(u23, mask_of({1, 2, 3})) == 2);
}

TEST_CASE("rank_of matches the basis-intersection definition") {
  const Matroid m = family_matroid(Family::B, 3, 2);
  for (Mask x = 0; x <= m.ground_set(); ++x) {
    CHECK(m.rank_of(x) == testing::naive_rank(m, x));
  }
}

TEST_CASE("bicircular rank of a doubled link") {
  // Two parallel links span two vertices and carry one cycle.
  const MultiGraph a3 = catalog_graph("A3");
  const Matroid b = bicircular_matroid(a3);
  CHECK(rank_of(b, mask_of({1, 2})) == 2);
}

namespace {

// Independent circuit oracle for cycle matroids: edge sets of the cycles of
// the graph, found by scanning subsets for connected 2-regular subgraphs.
std::vector<Mask> cycles_of(const MultiGraph& g) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= full_mask(g.edge_count()); ++s) {
    std::vector<int> degree(g.vertex_count + 1, 0);
    for (int i = 1; i <= g.edge_count(); ++i) {
      if (s & element_bit(i)) {
        degree[g.edges[i - 1].a] += 1;
        degree[g.edges[i - 1].b] += 1;
      }
    }
    bool two_regular = true;
    for (int v = 1; v <= g.vertex_count; ++v) {
      if (degree[v] != 0 && degree[v] != 2) two_regular = false;
    }
    if (!two_regular) continue;
    // a connected 2-regular subgraph is a single cycle
    std::vector<int> parent(g.vertex_count + 1);
    for (int v = 0; v <= g.vertex_count; ++v) parent[v] = v;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int root = -1;
    bool connected = true;
    for (int i = 1; i <= g.edge_count(); ++i) {
      if (s & element_bit(i)) parent[find(g.edges[i - 1].a)] = find(g.edges[i - 1].b);
    }
    for (int v = 1; v <= g.vertex_count; ++v) {
      if (degree[v] == 0) continue;
      if (root < 0) root = find(v);
      if (find(v) != root) connected = false;
    }
    if (connected) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), set_lex_less);
  return out;
}

}  // namespace

TEST_CASE("circuits of small matroids") {
  CHECK(circuits(uniform_matroid(2, 3)) == std::vector<Mask>{mask_of({1, 2, 3})});
  const Matroid pairs = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
  CHECK(circuits(pairs) == std::vector<Mask>{mask_of({1, 2}), mask_of({3, 4})});
}

TEST_CASE("circuits of M(K_4) are its cycles") {
  const MultiGraph k4 = complete_graph(4);
  const Matroid m = cycle_matroid(k4);
  const std::vector<Mask> expected = cycles_of(k4);
  CHECK(circuits(m) == expected);
  int triangles = 0, squares = 0;
  for (Mask c : expected) {
    if (popcount(c) == 3) ++triangles;
    if (popcount(c) == 4) ++squares;
  }
  CHECK(triangles == 4);
  CHECK(squares == 3);
  CHECK(expected.size() == 7);
}

TEST_CASE("dual examples and involution") {
  CHECK(dual(uniform_matroid(2, 5)) == uniform_matroid(3, 5));
  for (const CatalogEntry& e : theorem1_entries()) {
    CHECK(dual(dual(e.matroid)) == e.matroid);
  }
}

TEST_CASE("minor basics") {
  const Matroid u35 = uniform_matroid(3, 5);
  CHECK(minor(u35, 0, mask_of({5})) == uniform_matroid(3, 4));
  CHECK(minor(u35, mask_of({1}), 0) == uniform_matroid(2, 4));
  CHECK_THROWS_AS(minor(u35, mask_of({1}), mask_of({1})), Error);
}

TEST_CASE("direct sum sizes and basis counts") {
  const Matroid a = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
  CHECK(a.rank() == 2);
  CHECK(a.size() == 4);
  CHECK(a.basis_count() == 4);
  CHECK(direct_sum(uniform_matroid(2, 3), uniform_matroid(2, 3)).basis_count() == 9);
  const Matroid c = direct_sum(uniform_matroid(1, 2), uniform_matroid(3, 5));
  CHECK(c.rank() == 4);
  CHECK(c.size() == 7);
  CHECK(c.basis_count() == 20);
}

TEST_CASE("basis counts multiply under direct sum") {
  const Matroid parts[] = {uniform_matroid(2, 4), family_matroid(Family::B, 2, 2),
                           cycle_matroid(complete_graph(3))};
  for (const Matroid& a : parts) {
    for (const Matroid& b : parts) {
      CHECK(direct_sum(a, b).basis_count() == a.basis_count() * b.basis_count());
    }
  }
}

TEST_CASE("free extension") {
  CHECK(free_extend(uniform_matroid(2, 3)) == uniform_matroid(2, 4));
  CHECK(free_extend(uniform_matroid(1, 1)) == uniform_matroid(1, 2));
  CHECK_THROWS_AS(free_extend(uniform_matroid(0, 2)), Error);
}

TEST_CASE("truncation") {
  CHECK(truncate_to(uniform_matroid(2, 3), 1) == uniform_matroid(1, 3));
  const Matroid pairs = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
  CHECK(truncate_to(pairs, 2) == pairs);
  CHECK_THROWS_AS(truncate_to(pairs, 3), Error);
  CHECK_THROWS_AS(truncate_to(pairs, 0), Error);
}

TEST_CASE("truncation bases are the independent t-subsets") {
  const Matroid big =
      direct_sum(direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2)), uniform_matroid(3, 3));
  const Matroid t3 = truncate_to(big, 3);
  CHECK(t3.rank() == 3);
  CHECK(t3.size() == 7);
  std::vector<Mask> expected;
  for (Mask x = 0; x <= big.ground_set(); ++x) {
    if (popcount(x) == 3 && big.independent(x)) expected.push_back(x);
  }
  std::sort(expected.begin(), expected.end(), set_lex_less);
  CHECK(t3.bases() == expected);
  CHECK(t3.basis_count() == 25);
}

TEST_CASE("parallel classes") {
  const ParallelClasses b22 = parallel_classes(family_matroid(Family::B, 2, 2));
  REQUIRE(b22.classes.size() == 3);
  for (Mask cls : b22.classes) CHECK(popcount(cls) == 2);
  CHECK(b22.loops == 0);

  const ParallelClasses u37 = parallel_classes(uniform_matroid(3, 7));
  CHECK(u37.classes.size() == 7);

  const ParallelClasses r3 = parallel_classes(bicircular_matroid(catalog_graph("R3")));
  int twos = 0, ones = 0;
  for (Mask cls : r3.classes) {
    if (popcount(cls) == 2) ++twos;
    if (popcount(cls) == 1) ++ones;
  }
  CHECK(twos == 2);
  CHECK(ones == 3);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2))));
  CHECK(is_connected(uniform_matroid(3, 7)));
  CHECK(is_connected(family_matroid(Family::A, 3)));
}

TEST_CASE("vertical connectivity") {
  CHECK(is_vertically_k_connected(uniform_matroid(3, 7), 3));
  const Matroid disconnected = direct_sum(uniform_matroid(2, 3), uniform_matroid(2, 3));
  const auto sep = find_vertical_separation(disconnected, 2);
  REQUIRE(sep.has_value());
  CHECK(sep->order == 1);
  CHECK(disconnected.rank_of(sep->a) + disconnected.rank_of(sep->b) - disconnected.rank() <
        sep->order);
}

namespace {

bool is_spanning_tree(const MultiGraph& g, Mask s) {
  // test-side: acyclic via DFS and touching all vertices
  std::vector<std::vector<int>> adj(g.vertex_count + 1);
  int edges = 0;
  for (int i = 1; i <= g.edge_count(); ++i) {
    if (!(s & element_bit(i))) continue;
    const GraphEdge& e = g.edges[i - 1];
    if (e.kind != GraphEdge::link) return false;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
    ++edges;
  }
  if (edges != g.vertex_count - 1) return false;
  std::vector<bool> seen(g.vertex_count + 1, false);
  std::vector<int> stack = {1};
  seen[1] = true;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == g.vertex_count;
}

}  // namespace

TEST_CASE("cycle matroid of K_4") {
  const MultiGraph k4 = complete_graph(4);
  const Matroid m = cycle_matroid(k4);
  CHECK(m.rank() == 3);
  CHECK(m.size() == 6);
  int trees = 0;
  for (Mask s = 0; s <= full_mask(6); ++s) {
    if (popcount(s) == 3 && is_spanning_tree(k4, s)) {
      ++trees;
      CHECK(m.is_basis(s));
    }
  }
  CHECK(trees == 16);
  CHECK(m.basis_count() == 16);
}

TEST_CASE("cycle matroid degenerate cases") {
  CHECK(cycle_matroid(complete_graph(3)) == uniform_matroid(2, 3));
  MultiGraph one_loop;
  one_loop.vertex_count = 1;
  one_loop.edges = {GraphEdge::make_loop(1)};
  const Matroid m = cycle_matroid(one_loop);
  CHECK(m.rank() == 0);
  CHECK(m.loops() == mask_of({1}));
  MultiGraph with_free;
  with_free.vertex_count = 1;
  with_free.edges = {GraphEdge::make_free()};
  CHECK_THROWS_AS(cycle_matroid(with_free), Error);
}

TEST_CASE("relaxing the rim of the wheel gives the whirl") {
  const Matroid wheel = cycle_matroid(complete_graph(4));
  const Matroid whirl = relax_circuit_hyperplane(wheel, mask_of({1, 2, 4}));
  CHECK(whirl.basis_count() == 17);
  CHECK(wheel.basis_count() == 16);
  Budget budget;
  CHECK_FALSE(find_isomorphism(wheel, whirl, budget).has_value());
  // No 2-subset of U_{2,3} is a circuit-hyperplane.
  const Matroid u23 = uniform_matroid(2, 3);
  for (Mask x = 0; x <= u23.ground_set(); ++x) {
    if (popcount(x) == 2) CHECK_THROWS_AS(relax_circuit_hyperplane(u23, x), Error);
  }
}

TEST_CASE("duality interchanges deletion and contraction") {
  std::vector<Matroid> corpus;
  for (const CatalogEntry& e : theorem1_entries()) corpus.push_back(e.matroid);
  for (const Matroid& m : corpus) {
    for (int x = 1; x <= m.size(); ++x) {
      CHECK(dual(minor(m, 0, element_bit(x))) == minor(dual(m), element_bit(x), 0));
      CHECK(dual(minor(m, element_bit(x), 0)) == minor(dual(m), 0, element_bit(x)));
    }
  }
}

TEST_CASE("truncation is idempotent in the target rank") {
  const Matroid m = family_matroid(Family::B, 3, 3);
  CHECK(truncate_to(m, m.rank()) == m);
  CHECK(truncate_to(truncate_to(m, 2), 2) == truncate_to(m, 2));
}

TEST_CASE("rank function is monotone and submodular") {
  std::vector<Matroid> subjects = {family_matroid(Family::B, 3, 2), uniform_matroid(3, 6),
                                   bicircular_matroid(catalog_graph("A3"))};
  for (const Matroid& m : enumerate_lpm_corpus(6)) subjects.push_back(m);
  for (const Matroid& m : enumerate_bicircular_corpus(5, 3)) subjects.push_back(m);
  for (const Matroid& m : subjects) {
    REQUIRE(m.size() <= 9);
    bool monotone = true, submodular = true;
    for (Mask a = 0; a <= m.ground_set(); ++a) {
      for (Mask b = 0; b <= m.ground_set(); ++b) {
        if ((a & b) == a && m.rank_of(a) > m.rank_of(b)) monotone = false;
        if (m.rank_of(a | b) + m.rank_of(a & b) > m.rank_of(a) + m.rank_of(b)) submodular = false;
      }
      if (m.size() == 0) break;
    }
    CHECK(monotone);
    CHECK(submodular);
  }
}

TEST_CASE("random basis removal either stays a matroid or trips the validator") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int r = 2 + static_cast<int>(rng() % 2);
    const Matroid u = uniform_matroid(r, n);
    std::vector<Mask> bases = u.bases();
    bases.erase(bases.begin() + static_cast<int>(rng() % bases.size()));
    const bool valid = !testing::scan_exchange(bases).has_value();
    try {
      const Matroid m = Matroid::from_basis_masks(n, bases);
      CHECK(valid);
      CHECK(m.basis_count() == bases.size());
    } catch (const Error& e) {
      CHECK(e.code() == Errc::exchange_violation);
      CHECK_FALSE(valid);
    }
  }
}

TEST_CASE("loops and coloops") {
  MultiGraph g;
  g.vertex_count = 1;
  g.edges = {GraphEdge::make_free()};
  const Matroid m = bicircular_matroid(g);
  CHECK(m.rank() == 0);
  CHECK(m.size() == 1);
  CHECK(m.loops() == mask_of({1}));
  CHECK(uniform_matroid(2, 2).coloops() == mask_of({1, 2}));
}
