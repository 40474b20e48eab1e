#include "lpbc/transversal.hpp"

#include <algorithm>

namespace lpbc {

void validate(const SetFamily& f) {
  if (f.n < 0 || f.n > kMaxGroundSetSize)
    fail(Errc::ground_set_too_large, "set family ground set outside 0.." + std::to_string(kMaxGroundSetSize));
  for (Mask s : f.sets) {
    if ((s & ~full_mask(f.n)) != 0) fail(Errc::validation_error, "set member outside 1..n");
  }
}

namespace {

// Kuhn's augmenting path: match element e (0-based in elems) to one of the
// sets; match_of_set[j] = index into elems or -1.
bool augment(const SetFamily& f, const std::vector<int>& elems, int ei, std::vector<int>& match_of_set,
             std::vector<char>& visited) {
  for (int j = 0; j < f.set_count(); ++j) {
    if (visited[j] || !(f.sets[j] & element_bit(elems[ei]))) continue;
    visited[j] = 1;
    if (match_of_set[j] < 0 || augment(f, elems, match_of_set[j], match_of_set, visited)) {
      match_of_set[j] = ei;
      return true;
    }
  }
  return false;
}

int max_matching(const SetFamily& f, Mask x) {
  const std::vector<int> elems = elements_of(x);
  std::vector<int> match_of_set(f.set_count(), -1);
  int matched = 0;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
    std::vector<char> visited(f.set_count(), 0);
    if (augment(f, elems, i, match_of_set, visited)) ++matched;
  }
  return matched;
}

}  // namespace

bool is_partial_transversal(const SetFamily& f, Mask x) {
  if ((x & ~full_mask(f.n)) != 0) fail(Errc::validation_error, "subset outside the ground set");
  return max_matching(f, x) == popcount(x);
}

Matroid matroid_of_family(const SetFamily& f) {
  validate(f);
  const int r = max_matching(f, full_mask(f.n));
  std::vector<Mask> bases;
  for (Mask x = 0;; ++x) {
    if (popcount(x) == r && max_matching(f, x) == r) bases.push_back(x);
    if (x == full_mask(f.n)) break;
  }
  return Matroid::trusted(f.n, std::move(bases));
}

SetFamily delete_element(const SetFamily& f, int x) {
  if (x < 1 || x > f.n) fail(Errc::validation_error, "element out of range");
  SetFamily out;
  out.n = f.n - 1;
  const Mask xb = element_bit(x);
  const Mask low = xb - 1;
  for (Mask s : f.sets) {
    if (s == xb) continue;  // x was a coloop; the set vanishes
    Mask t = s & ~xb;
    out.sets.push_back((t & low) | ((t & ~low & ~xb) >> 1));
  }
  return out;
}

namespace {

// Exhaustive search over families of r(M) sets in which every element lies
// in at most two sets. Candidate families are scanned as non-decreasing
// sequences over the subset universe ordered by (size, lex); a partial
// family is pruned when some transversal of it is dependent in M, since
// transversals of a subfamily stay partial transversals of any extension.
struct Width2Search {
  const Matroid& m;
  Budget& budget;
  std::vector<Mask> universe;             // non-empty subsets of the non-loops
  std::vector<Mask> chosen;
  std::vector<std::vector<Mask>> layers;  // layers[j] = transversals of the first j sets
  std::vector<int> incidence;             // per element, sets used so far

  bool run(int from, SetFamily* out) {
    budget.charge();
    const int j = static_cast<int>(chosen.size());
    const int r = m.rank();
    if (j == r) {
      std::vector<Mask> transversals = layers.back();
      std::sort(transversals.begin(), transversals.end(), set_lex_less);
      if (transversals == m.bases()) {
        out->n = m.size();
        out->sets = chosen;
        return true;
      }
      return false;
    }
    for (int i = from; i < static_cast<int>(universe.size()); ++i) {
      const Mask cand = universe[i];
      bool capped = false;
      for (int e : elements_of(cand)) {
        if (incidence[e - 1] >= 2) {
          capped = true;
          break;
        }
      }
      if (capped) continue;
      std::vector<Mask> next;
      bool ok = true;
      for (Mask t : layers.back()) {
        Mask free_elems = cand & ~t;
        while (free_elems) {
          const Mask low = free_elems & (~free_elems + 1);
          const Mask ext = t | low;
          if (m.dependent(ext)) {
            ok = false;
            break;
          }
          next.push_back(ext);
          free_elems ^= low;
        }
        if (!ok) break;
      }
      if (!ok || next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      chosen.push_back(cand);
      for (int e : elements_of(cand)) incidence[e - 1] += 1;
      layers.push_back(std::move(next));
      if (run(i, out)) return true;
      layers.pop_back();
      for (int e : elements_of(cand)) incidence[e - 1] -= 1;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<SetFamily> width2_presentation_search(const Matroid& m, Budget& budget) {
  if (m.rank() == 0) {
    // Only loops; the empty family presents M.
    SetFamily out;
    out.n = m.size();
    return out;
  }
  Width2Search search{m, budget, {}, {}, {}, std::vector<int>(m.size(), 0)};
  const Mask nonloops = m.ground_set() & ~m.loops();
  for (Mask s = 1; s <= m.ground_set(); ++s) {
    if (s != 0 && (s & ~nonloops) == 0) search.universe.push_back(s);
  }
  std::sort(search.universe.begin(), search.universe.end(), set_lex_less);
  search.layers.push_back({Mask{0}});
  SetFamily out;
  if (search.run(0, &out)) return out;
  return std::nullopt;
}

}  // namespace lpbc
