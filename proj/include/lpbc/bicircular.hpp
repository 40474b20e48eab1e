#pragma once

#include <optional>

#include "lpbc/budget.hpp"
#include "lpbc/matroid.hpp"
#include "lpbc/multigraph.hpp"

namespace lpbc {

// Minimum circuit size; fails with NoCircuit on a free matroid.
int girth(const Matroid& m);

// Element-count bound satisfied by every bicircular matroid whose circuits
// all exceed k = girth-1 elements: |E| <= r(r-1)/(k-2). Requires girth >= 4.
// false means the bound is violated, so M cannot be bicircular.
bool check_size_bound(const Matroid& m);

// Exhaustive search for a multigraph G on at most r(M) vertices with
// B(G) = M (labeled equality). Matroid loops are forced onto free edges;
// the remaining elements range over loop and link slots of the simplex.
// absent therefore proves M is not bicircular. Deterministic: vertices are
// introduced in increasing order and slots are scanned loops-then-links.
std::optional<MultiGraph> find_bicircular_representation(const Matroid& m, Budget& budget);

bool is_bicircular(const Matroid& m, Budget& budget);

}  // namespace lpbc
