#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpbc/errors.hpp"

namespace lpbc {

// Ground sets are 1..n; element e occupies bit (e-1) of a Mask.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 16;

constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
constexpr Mask full_mask(int n) { return n == 0 ? Mask{0} : ((Mask{1} << n) - 1); }

int popcount(Mask m);
Mask mask_of(const std::vector<int>& elements);
std::vector<int> elements_of(Mask m);
std::string set_to_string(Mask m);  // "1 3 5", "" for the empty set

// Orders sets by size, then lexicographically on the sorted element lists.
bool set_lex_less(Mask a, Mask b);

// A matroid given by its set of bases. Immutable after construction; the
// independence and rank tables over all 2^n subsets are precomputed, so
// every query is a lookup and the object is safe to share across threads.
class Matroid {
 public:
  // Validates uniform basis size, element range and the exchange axiom.
  static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);
  static Matroid from_basis_masks(int n, std::vector<Mask> bases);

  // Skips the exchange check; for results of operations that preserve
  // matroid-ness by construction.
  static Matroid trusted(int n, std::vector<Mask> bases);

  int size() const { return n_; }
  int rank() const { return rank_; }
  Mask ground_set() const { return full_mask(n_); }
  const std::vector<Mask>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }

  bool independent(Mask x) const { return independent_[x] != 0; }
  bool dependent(Mask x) const { return independent_[x] == 0; }
  int rank_of(Mask x) const { return rank_table_[x]; }
  bool is_basis(Mask x) const { return popcount(x) == rank_ && independent(x); }
  bool is_circuit(Mask x) const;
  Mask closure(Mask x) const;

  Mask loops() const;    // elements in no basis
  Mask coloops() const;  // elements in every basis

  bool operator==(const Matroid& o) const { return n_ == o.n_ && bases_ == o.bases_; }
  bool operator!=(const Matroid& o) const { return !(*this == o); }

 private:
  Matroid(int n, std::vector<Mask> bases, bool validate);
  void build_tables();

  int n_ = 0;
  int rank_ = 0;
  std::vector<Mask> bases_;              // sorted by set_lex_less, deduplicated
  std::vector<std::uint8_t> independent_;  // 2^n entries
  std::vector<std::uint8_t> rank_table_;  // 2^n entries
};

Matroid uniform_matroid(int r, int n);

int rank_of(const Matroid& m, Mask x);

// All minimal dependent sets, sorted by (size, lexicographic).
std::vector<Mask> circuits(const Matroid& m);

Matroid dual(const Matroid& m);

// M/contract \ remove with the ground set relabeled to 1..n' preserving order.
Matroid minor(const Matroid& m, Mask contract, Mask remove);

// Order-preserving relabeling used by minor(): maps the elements of
// {1..n} \ removed to 1..n'. old_of_new[i] is the original label of i+1.
std::vector<int> minor_relabeling(int n, Mask removed);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// M + e: new element n+1 in general position.
Matroid free_extend(const Matroid& m);

// Iterated truncation (free extension, then contraction of the new element)
// down to the target rank.
Matroid truncate_to(const Matroid& m, int target_rank);

struct ParallelClasses {
  std::vector<Mask> classes;  // partition of the non-loop elements, by min element
  Mask loops = 0;
};
ParallelClasses parallel_classes(const Matroid& m);

bool is_connected(const Matroid& m);

struct VerticalSeparation {
  Mask a = 0;
  Mask b = 0;
  int order = 0;  // the l with r(A)+r(B)-r(M) < l
};

// First vertical l-separation with l < k in bit-counter scan order, or
// nullopt when M is vertically k-connected. Exhaustive over bipartitions;
// refuses ground sets larger than 12 elements.
std::optional<VerticalSeparation> find_vertical_separation(const Matroid& m, int k);
bool is_vertically_k_connected(const Matroid& m, int k);

// Adds X (which must be both a circuit and a hyperplane) as a basis.
Matroid relax_circuit_hyperplane(const Matroid& m, Mask x);

}  // namespace lpbc
