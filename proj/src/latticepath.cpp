#include "lpbc/latticepath.hpp"

#include <algorithm>

#include "lpbc/catalog.hpp"

namespace lpbc {

void validate(const LatticePathPresentation& l) {
  if (l.east < 0 || l.north < 0) fail(Errc::validation_error, "negative path dimensions");
  if (l.size() > kMaxGroundSetSize)
    fail(Errc::ground_set_too_large, "lattice path region larger than " + std::to_string(kMaxGroundSetSize) + " steps");
  auto check_path = [&](const std::string& path, const char* which) {
    if (static_cast<int>(path.size()) != l.size())
      fail(Errc::validation_error, std::string(which) + " has wrong length");
    int norths = 0;
    for (char c : path) {
      if (c == 'N') {
        ++norths;
      } else if (c != 'E') {
        fail(Errc::validation_error, std::string(which) + " contains a step other than N/E");
      }
    }
    if (norths != l.north) fail(Errc::validation_error, std::string(which) + " has wrong North step count");
  };
  check_path(l.lower, "P");
  check_path(l.upper, "Q");
  int lower_n = 0, upper_n = 0;
  for (int t = 0; t < l.size(); ++t) {
    if (l.lower[t] == 'N') ++lower_n;
    if (l.upper[t] == 'N') ++upper_n;
    if (lower_n > upper_n) fail(Errc::validation_error, "P rises strictly above Q");
  }
}

void validate(const StandardPresentation& s) {
  if (s.n < 0 || s.n > kMaxGroundSetSize)
    fail(Errc::ground_set_too_large, "interval family ground set outside 0.." + std::to_string(kMaxGroundSetSize));
  for (int i = 0; i < s.rank(); ++i) {
    const auto [lo, hi] = s.intervals[i];
    if (lo < 1 || hi > s.n || lo > hi)
      fail(Errc::validation_error, "interval " + std::to_string(i + 1) + " is not within 1..n");
    if (i > 0) {
      if (s.intervals[i - 1].first >= lo)
        fail(Errc::validation_error, "lower endpoints do not form a chain at interval " + std::to_string(i + 1));
      if (s.intervals[i - 1].second >= hi)
        fail(Errc::validation_error, "upper endpoints do not form a chain at interval " + std::to_string(i + 1));
    }
  }
}

namespace {

// Prefix North-counts; window[t] = allowed North count after t steps.
struct Window {
  std::vector<int> lo, hi;
};

Window region_window(const LatticePathPresentation& l) {
  Window w;
  w.lo.assign(l.size() + 1, 0);
  w.hi.assign(l.size() + 1, 0);
  for (int t = 1; t <= l.size(); ++t) {
    w.lo[t] = w.lo[t - 1] + (l.lower[t - 1] == 'N');
    w.hi[t] = w.hi[t - 1] + (l.upper[t - 1] == 'N');
  }
  return w;
}

void enumerate_paths(const Window& w, int steps, int t, int norths, Mask acc, std::vector<Mask>* out) {
  if (t == steps) {
    out->push_back(acc);
    return;
  }
  // North step
  if (norths + 1 <= w.hi[t + 1]) enumerate_paths(w, steps, t + 1, norths + 1, acc | element_bit(t + 1), out);
  // East step
  if (norths >= w.lo[t + 1]) enumerate_paths(w, steps, t + 1, norths, acc, out);
}

}  // namespace

Matroid matroid_of_lpm(const LatticePathPresentation& l) {
  validate(l);
  const Window w = region_window(l);
  std::vector<Mask> bases;
  enumerate_paths(w, l.size(), 0, 0, 0, &bases);
  return Matroid::trusted(l.size(), std::move(bases));
}

StandardPresentation to_standard_presentation(const LatticePathPresentation& l) {
  validate(l);
  StandardPresentation s;
  s.n = l.size();
  int lower_easts = 0, upper_easts = 0, li = 0, ui = 0;
  std::vector<int> lower_easts_before_n(l.north + 1, 0), upper_easts_before_n(l.north + 1, 0);
  for (char c : l.lower) {
    if (c == 'E') {
      ++lower_easts;
    } else {
      lower_easts_before_n[++li] = lower_easts;
    }
  }
  for (char c : l.upper) {
    if (c == 'E') {
      ++upper_easts;
    } else {
      upper_easts_before_n[++ui] = upper_easts;
    }
  }
  for (int i = 1; i <= l.north; ++i) {
    s.intervals.emplace_back(upper_easts_before_n[i] + i, lower_easts_before_n[i] + i);
  }
  return s;
}

SetFamily family_of_standard(const StandardPresentation& s) {
  validate(s);
  SetFamily f;
  f.n = s.n;
  for (auto [lo, hi] : s.intervals) {
    Mask m = 0;
    for (int e = lo; e <= hi; ++e) m |= element_bit(e);
    f.sets.push_back(m);
  }
  return f;
}

Matroid matroid_of_standard(const StandardPresentation& s) {
  return matroid_of_family(family_of_standard(s));
}

std::uint64_t count_paths(const LatticePathPresentation& l) {
  validate(l);
  const Window w = region_window(l);
  std::vector<std::uint64_t> cur(l.north + 1, 0), next(l.north + 1, 0);
  cur[0] = 1;
  for (int t = 1; t <= l.size(); ++t) {
    std::fill(next.begin(), next.end(), 0);
    for (int y = w.lo[t]; y <= w.hi[t]; ++y) {
      std::uint64_t ways = 0;
      if (y <= w.hi[t - 1] && y >= w.lo[t - 1]) ways += cur[y];          // East step
      if (y > 0 && y - 1 >= w.lo[t - 1] && y - 1 <= w.hi[t - 1]) ways += cur[y - 1];  // North step
      next[y] = ways;
    }
    std::swap(cur, next);
  }
  return cur[l.north];
}

StandardPresentation delete_presentation(const StandardPresentation& s, int x) {
  validate(s);
  if (x < 1 || x > s.n) fail(Errc::validation_error, "deleted element out of range");
  const int r = s.rank();
  std::vector<std::pair<int, int>> iv = s.intervals;

  int containing = -1, container_count = 0;
  for (int i = 0; i < r; ++i) {
    if (iv[i].first <= x && x <= iv[i].second) {
      containing = i;
      ++container_count;
    }
  }
  if (container_count == 1 && iv[containing].first == iv[containing].second) {
    // x is a coloop; its singleton interval is dropped.
    iv.erase(iv.begin() + containing);
  } else if (container_count > 0) {
    for (int k = 0; k < r; ++k) {
      if (iv[k].second == x) {
        // Walk the maximal run u_{k-j} = x-j of colliding upper endpoints.
        int j = 0;
        while (k - j - 1 >= 0 && iv[k - j - 1].second == x - j - 1) ++j;
        for (int i = k - j; i <= k; ++i) iv[i].second -= 1;
        break;
      }
    }
    for (int k = 0; k < r; ++k) {
      if (iv[k].first == x) {
        int j = 0;
        while (k + j + 1 < r && iv[k + j + 1].first == x + j + 1) ++j;
        for (int i = k; i <= k + j; ++i) iv[i].first += 1;
        break;
      }
    }
  }
  // Reindex the ground set to 1..n-1.
  StandardPresentation out;
  out.n = s.n - 1;
  for (auto [lo, hi] : iv) {
    out.intervals.emplace_back(lo > x ? lo - 1 : lo, hi > x ? hi - 1 : hi);
  }
  validate(out);
  return out;
}

std::optional<int> upper_bound_property_violation(const StandardPresentation& s) {
  for (int k = 1; k + 2 <= s.rank(); ++k) {
    if (s.intervals[k + 1].first > s.intervals[k - 1].second) return k;
  }
  return std::nullopt;
}

bool has_upper_bound_property(const StandardPresentation& s) {
  return !upper_bound_property_violation(s).has_value();
}

MinorWitness extract_uniform_minor(const LatticePathPresentation& l) {
  const Matroid m = matroid_of_lpm(l);
  if (m.rank() < 3) fail(Errc::precondition_violated, "rank below 3");
  if (!is_vertically_k_connected(m, 3))
    fail(Errc::precondition_violated, "matroid is not vertically 3-connected");

  StandardPresentation s = to_standard_presentation(l);
  // original[i] = original label of current element i+1
  std::vector<int> original(s.n);
  for (int i = 0; i < s.n; ++i) original[i] = i + 1;
  Mask removed = 0;

  auto remove_current = [&](int x) {
    removed |= element_bit(original[x - 1]);
    s = delete_presentation(s, x);
    original.erase(original.begin() + (x - 1));
  };

  // Loops (elements in no interval) sit outside [l_1, u_r]; drop them first.
  for (int e = s.n; e >= 1; --e) {
    bool covered = false;
    for (auto [lo, hi] : s.intervals) covered = covered || (lo <= e && e <= hi);
    if (!covered) remove_current(e);
  }

  const int r = s.rank();
  // Phase 1: make the lower endpoints consecutive.
  for (;;) {
    int k = -1;
    for (int i = 0; i + 1 < r; ++i) {
      if (s.intervals[i + 1].first != s.intervals[i].first + 1) {
        k = i;
        break;
      }
    }
    if (k < 0) break;
    remove_current(s.intervals[k].first + 1);
  }
  // Phase 2: make the upper endpoints consecutive, working from the top.
  for (;;) {
    int k = -1;
    for (int i = r - 1; i >= 1; --i) {
      if (s.intervals[i].second != s.intervals[i - 1].second + 1) {
        k = i;
        break;
      }
    }
    if (k < 0) break;
    remove_current(s.intervals[k].second - 1);
  }
  // The survivor is U_{r, r+t} with t >= 2; trim down to exactly U_{r, r+2}.
  while (s.n > r + 2) remove_current(s.n);

  MinorWitness w;
  w.target_name = "U" + std::to_string(r) + "_" + std::to_string(r + 2);
  w.contract = 0;
  w.remove = removed;
  w.iso.resize(r + 2);
  for (int i = 0; i < r + 2; ++i) w.iso[i] = i + 1;
  if (minor(m, 0, removed) != uniform_matroid(r, r + 2))
    fail(Errc::validation_error, "uniform minor extraction did not terminate in a uniform matroid");
  return w;
}

LatticePathDecision is_lattice_path(const Matroid& m, Budget& budget, int max_elements) {
  if (m.size() > max_elements)
    fail(Errc::ground_set_too_large, "lattice path decision capped at " + std::to_string(max_elements) + " elements");
  for (const auto& [name, candidate] : lattice_path_excluded_minors(m.size())) {
    if (auto w = find_minor(m, candidate, budget)) {
      w->target_name = name;
      return LatticePathDecision{false, std::move(w)};
    }
  }
  return LatticePathDecision{true, std::nullopt};
}

}  // namespace lpbc
