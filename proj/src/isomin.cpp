#include "lpbc/isomin.hpp"

#include <algorithm>
#include <sstream>

namespace lpbc {

InvariantProfile invariant_profile(const Matroid& m) {
  InvariantProfile p;
  p.n = m.size();
  p.rank = m.rank();
  p.basis_count = m.basis_count();
  const std::vector<Mask> circs = circuits(m);
  for (Mask c : circs) p.circuit_sizes.push_back(popcount(c));
  std::sort(p.circuit_sizes.begin(), p.circuit_sizes.end());
  p.element_incidences.assign(m.size(), std::vector<int>(m.size() + 2, 0));
  for (Mask c : circs) {
    const int sz = popcount(c);
    for (int e : elements_of(c)) p.element_incidences[e - 1][sz] += 1;
  }
  const ParallelClasses pc = parallel_classes(m);
  for (Mask cls : pc.classes) p.parallel_class_sizes.push_back(popcount(cls));
  std::sort(p.parallel_class_sizes.begin(), p.parallel_class_sizes.end());
  p.loop_count = popcount(m.loops());
  p.coloop_count = popcount(m.coloops());
  for (int e = 1; e <= m.size(); ++e) {
    auto& vec = p.element_incidences[e - 1];
    vec[0] = (m.loops() & element_bit(e)) ? 1 : 0;
    vec[m.size() + 1] = (m.coloops() & element_bit(e)) ? 1 : 0;
  }
  std::sort(p.element_incidences.begin(), p.element_incidences.end());
  return p;
}

std::string InvariantProfile::key() const {
  std::ostringstream ss;
  ss << n << '|' << rank << '|' << basis_count << '|';
  for (int s : circuit_sizes) ss << s << ',';
  ss << '|';
  for (const auto& vec : element_incidences) {
    for (int v : vec) ss << v << ',';
    ss << ';';
  }
  ss << '|';
  for (int s : parallel_class_sizes) ss << s << ',';
  ss << '|' << loop_count << '|' << coloop_count;
  return ss.str();
}

Mask apply_permutation(Mask x, const Permutation& perm) {
  Mask out = 0;
  for (int e : elements_of(x)) out |= element_bit(perm[e - 1]);
  return out;
}

Matroid relabel(const Matroid& m, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != m.size()) fail(Errc::validation_error, "permutation size mismatch");
  std::vector<Mask> bases;
  bases.reserve(m.basis_count());
  for (Mask b : m.bases()) bases.push_back(apply_permutation(b, perm));
  return Matroid::trusted(m.size(), std::move(bases));
}

namespace {

// Per-element invariant used to restrict candidate images: circuit-size
// incidence counts plus loop/coloop flags.
std::vector<std::vector<int>> element_keys(const Matroid& m) {
  std::vector<std::vector<int>> keys(m.size(), std::vector<int>(m.size() + 2, 0));
  for (Mask c : circuits(m)) {
    const int sz = popcount(c);
    for (int e : elements_of(c)) keys[e - 1][sz] += 1;
  }
  for (int e = 1; e <= m.size(); ++e) {
    keys[e - 1][0] = (m.loops() & element_bit(e)) ? 1 : 0;
    keys[e - 1][m.size() + 1] = (m.coloops() & element_bit(e)) ? 1 : 0;
  }
  return keys;
}

struct IsoSearch {
  const Matroid& a;
  const Matroid& b;
  Budget& budget;
  std::vector<std::vector<int>> keys_a, keys_b;
  Permutation image;       // image[e-1], 0 = unassigned
  Mask used_images = 0;
  Mask mapped_domain = 0;  // elements of a assigned so far

  bool consistent_with(int e, int f) {
    // Check every subset of the mapped prefix containing e against its image.
    const Mask prev = mapped_domain & ~element_bit(e);
    Mask sub = prev;
    while (true) {
      budget.charge();
      Mask dom = sub | element_bit(e);
      Mask img = element_bit(f);
      for (int x : elements_of(sub)) img |= element_bit(image[x - 1]);
      if (a.independent(dom) != b.independent(img)) return false;
      if (sub == 0) break;
      sub = (sub - 1) & prev;
    }
    return true;
  }

  bool assign(int e) {
    if (e > a.size()) return true;
    for (int f = 1; f <= b.size(); ++f) {
      if (used_images & element_bit(f)) continue;
      if (keys_a[e - 1] != keys_b[f - 1]) continue;
      image[e - 1] = f;
      used_images |= element_bit(f);
      mapped_domain |= element_bit(e);
      if (consistent_with(e, f) && assign(e + 1)) return true;
      mapped_domain &= ~element_bit(e);
      used_images &= ~element_bit(f);
      image[e - 1] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> find_isomorphism(const Matroid& a, const Matroid& b, Budget& budget) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.basis_count() != b.basis_count())
    return std::nullopt;
  if (invariant_profile(a) != invariant_profile(b)) return std::nullopt;
  IsoSearch search{a, b, budget, element_keys(a), element_keys(b), Permutation(a.size(), 0), 0, 0};
  if (search.assign(1)) return search.image;
  return std::nullopt;
}

namespace {

// Fixed-size combinations of positions [0, pool) in lexicographic order.
struct Combinations {
  int pool;
  int size;
  std::vector<int> idx;
  bool done = false;

  Combinations(int pool_, int size_) : pool(pool_), size(size_) {
    if (size > pool) {
      done = true;
      return;
    }
    for (int i = 0; i < size; ++i) idx.push_back(i);
  }

  void next() {
    int i = size - 1;
    while (i >= 0 && idx[i] == pool - size + i) --i;
    if (i < 0) {
      done = true;
      return;
    }
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
};

}  // namespace

std::optional<MinorWitness> find_minor(const Matroid& host, const Matroid& target, Budget& budget) {
  const int contract_size = host.rank() - target.rank();
  const int remove_size = host.size() - contract_size - target.size();
  if (contract_size < 0 || remove_size < 0) return std::nullopt;
  const InvariantProfile target_profile = invariant_profile(target);
  const std::vector<int> all = elements_of(host.ground_set());

  for (Combinations cs(host.size(), contract_size); !cs.done; cs.next()) {
    Mask contract = 0;
    for (int i : cs.idx) contract |= element_bit(all[i]);
    if (!host.independent(contract)) continue;
    const std::vector<int> rest = elements_of(host.ground_set() & ~contract);
    for (Combinations ds(static_cast<int>(rest.size()), remove_size); !ds.done; ds.next()) {
      budget.charge();
      Mask remove = 0;
      for (int i : ds.idx) remove |= element_bit(rest[i]);
      const Matroid candidate = minor(host, contract, remove);
      if (candidate.rank() != target.rank() || candidate.basis_count() != target.basis_count()) continue;
      if (invariant_profile(candidate) != target_profile) continue;
      if (auto iso = find_isomorphism(candidate, target, budget)) {
        return MinorWitness{"", contract, remove, *iso};
      }
    }
  }
  return std::nullopt;
}

bool witness_replays(const Matroid& host, const MinorWitness& w, const Matroid& target) {
  if ((w.contract & w.remove) != 0) return false;
  const Matroid mm = minor(host, w.contract, w.remove);
  if (mm.size() != target.size()) return false;
  if (static_cast<int>(w.iso.size()) != mm.size()) return false;
  return relabel(mm, w.iso) == target;
}

}  // namespace lpbc
