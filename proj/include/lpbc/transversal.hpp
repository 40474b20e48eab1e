#pragma once

#include <optional>
#include <vector>

#include "lpbc/budget.hpp"
#include "lpbc/matroid.hpp"

namespace lpbc {

// An ordered family (N_1, ..., N_r) of subsets of {1..n}.
struct SetFamily {
  int n = 0;
  std::vector<Mask> sets;

  int set_count() const { return static_cast<int>(sets.size()); }
};

void validate(const SetFamily& f);

// True iff the bipartite incidence graph has a matching saturating X.
bool is_partial_transversal(const SetFamily& f, Mask x);

// The transversal matroid M[N]: bases are the maximum partial transversals.
Matroid matroid_of_family(const SetFamily& f);

// Removes x from every set (dropping a set that becomes empty, which happens
// exactly when x was a coloop) and reindexes the ground set; presents M \ x.
SetFamily delete_element(const SetFamily& f, int x);

// Exhaustive search for a presentation of M with r(M) sets in which every
// element lies in at most two sets. Such a presentation exists iff M is
// bicircular; intended as a cross-oracle at small n, independent of the
// graph slot search.
std::optional<SetFamily> width2_presentation_search(const Matroid& m, Budget& budget);

}  // namespace lpbc
