#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpbc/isomin.hpp"
#include "lpbc/matroid.hpp"
#include "lpbc/transversal.hpp"

namespace lpbc {

// Region between two monotone lattice paths from (0,0) to (east, north),
// encoded as step strings over {N, E}. lower never goes strictly above
// upper (prefix North-counts of lower <= those of upper).
struct LatticePathPresentation {
  int east = 0;   // m
  int north = 0;  // r
  std::string lower;  // P
  std::string upper;  // Q

  int size() const { return east + north; }
};

void validate(const LatticePathPresentation& l);

// Interval family ([l_1,u_1], ..., [l_r,u_r]) with strictly increasing
// lower and upper endpoint chains.
struct StandardPresentation {
  int n = 0;
  std::vector<std::pair<int, int>> intervals;

  int rank() const { return static_cast<int>(intervals.size()); }
};

void validate(const StandardPresentation& s);

Matroid matroid_of_lpm(const LatticePathPresentation& l);
StandardPresentation to_standard_presentation(const LatticePathPresentation& l);
Matroid matroid_of_standard(const StandardPresentation& s);
SetFamily family_of_standard(const StandardPresentation& s);
std::uint64_t count_paths(const LatticePathPresentation& l);

// Standard presentation of M \ x obtained by removing x from every interval
// and re-chaining colliding endpoint runs; the ground set is reindexed to
// 1..n-1 immediately.
StandardPresentation delete_presentation(const StandardPresentation& s, int x);

// Checks l_{k+2} <= u_k for k = 1..r-2; returns the first violating k, or
// nullopt when the property holds (vacuously for r < 3).
std::optional<int> upper_bound_property_violation(const StandardPresentation& s);
bool has_upper_bound_property(const StandardPresentation& s);

// Constructive U_{r,r+2} witness for a vertically 3-connected region with
// r >= 3: repeatedly deletes elements just above lower-endpoint gaps, then
// symmetrically below upper-endpoint gaps, ending in a uniform minor.
MinorWitness extract_uniform_minor(const LatticePathPresentation& l);

// Excluded-minor membership test for the lattice path class; checks every
// excluded minor with at most |E(M)| elements. max_elements caps |E(M)|.
struct LatticePathDecision {
  bool is_member = false;
  std::optional<MinorWitness> witness;
};
LatticePathDecision is_lattice_path(const Matroid& m, Budget& budget, int max_elements = 10);

}  // namespace lpbc
