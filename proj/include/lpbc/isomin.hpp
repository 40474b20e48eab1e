#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpbc/budget.hpp"
#include "lpbc/matroid.hpp"

namespace lpbc {

// Isomorphism-invariant fingerprint used to pre-filter isomorphism tests
// and to bucket corpus deduplication.
struct InvariantProfile {
  int n = 0;
  int rank = 0;
  std::size_t basis_count = 0;
  std::vector<int> circuit_sizes;                       // sorted multiset
  std::vector<std::vector<int>> element_incidences;     // sorted per-element vectors
  std::vector<int> parallel_class_sizes;                // sorted multiset
  int loop_count = 0;
  int coloop_count = 0;

  bool operator==(const InvariantProfile& o) const = default;
  std::string key() const;
};

InvariantProfile invariant_profile(const Matroid& m);

// perm[e-1] is the image of element e.
using Permutation = std::vector<int>;

Matroid relabel(const Matroid& m, const Permutation& perm);
Mask apply_permutation(Mask x, const Permutation& perm);

// Basis-preserving bijection from a to b, or nullopt. Returns the
// lexicographically least bijection; deterministic.
std::optional<Permutation> find_isomorphism(const Matroid& a, const Matroid& b, Budget& budget);

// Certificate that minor(host, contract, remove), relabeled by iso, equals a
// named catalog matroid exactly.
struct MinorWitness {
  std::string target_name;
  Mask contract = 0;
  Mask remove = 0;
  Permutation iso;
};

// Searches independent contraction sets of size r(host)-r(target), then
// deletion sets, in lexicographic element order; first witness found.
std::optional<MinorWitness> find_minor(const Matroid& host, const Matroid& target, Budget& budget);

// Replays a witness: applies (contract, remove, iso) and compares with the
// target for labeled equality.
bool witness_replays(const Matroid& host, const MinorWitness& w, const Matroid& target);

}  // namespace lpbc
