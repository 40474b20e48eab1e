#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpbc/latticepath.hpp"
#include "lpbc/matroid.hpp"
#include "lpbc/multigraph.hpp"

namespace lpbc {

// The five infinite families of lattice path excluded minors, plus the P
// matroids they are built from:
//   P(n)      = T_n(U_{n-1,n} + U_{n-1,n})          n >= 2
//   Pprime(n) = (P(n-1)* + e)*                      n >= 3
//   A(n)      = Pprime(n) + x                       n >= 3
//   B(n,k)    = T_n(U_{n-1,n} + U_{n-1,n} + U_{k-1,k})   n >= k >= 2
//   C(n,k)    = B(n,k)*  (named C_{n+k,k})          n >= k >= 2
//   D(n)      = (P(n-1) + U_{1,1}) + x              n >= 4
//   E(n)      = D(n)*                               n >= 4
enum class Family { P, Pprime, A, B, C, D, E };

std::optional<Family> family_from_string(const std::string& name);
Matroid family_matroid(Family f, int n, int k = 0);

// Reference bicircular representations of the named catalog matroids:
// A3, B3_3, C4_2, C5_2, D4, whirl3, R3, R4.
MultiGraph catalog_graph(const std::string& name);
std::vector<std::string> catalog_graph_names();

struct Representation {
  enum Kind { family_formula, bicircular_graph, lattice_path, geometric_note };
  Kind kind;
  std::string label;
  std::optional<Matroid> matroid;          // family_formula
  std::optional<MultiGraph> graph;         // bicircular_graph
  std::optional<LatticePathPresentation> lpm;  // lattice_path
  std::string note;                        // geometric_note
};

struct CatalogEntry {
  std::string name;
  int group = 0;  // 1, 2 or 3, matching (i)/(ii)/(iii)
  Matroid matroid;
  std::vector<Representation> representations;
};

// The 19 excluded minors for the class of bicircular and lattice path
// matroids, grouped (i) lattice path, (ii) bicircular, (iii) neither;
// the list behind the theorem1 membership test.
const std::vector<CatalogEntry>& theorem1_entries();
const CatalogEntry* find_entry(const std::string& name);

// All excluded minors for the lattice path class with at most max_elements
// elements (the four sporadic matroids plus family members), ordered by
// element count then catalog position.
const std::vector<std::pair<std::string, Matroid>>& lattice_path_excluded_minors(int max_elements);

}  // namespace lpbc
