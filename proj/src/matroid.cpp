#include "lpbc/matroid.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace lpbc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "ok";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::non_uniform_bases: return "NonUniformBases";
    case Errc::exchange_violation: return "ExchangeViolation";
    case Errc::overlapping_sets: return "OverlappingSets";
    case Errc::rank_zero: return "RankZero";
    case Errc::bad_target_rank: return "BadTargetRank";
    case Errc::ground_set_too_large: return "GroundSetTooLarge";
    case Errc::has_free_edge: return "HasFreeEdge";
    case Errc::not_circuit_hyperplane: return "NotCircuitHyperplane";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::no_circuit: return "NoCircuit";
    case Errc::girth_too_small: return "GirthTooSmall";
    case Errc::unknown_name: return "UnknownName";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::precondition_violated: return "PreconditionViolated";
  }
  return "unknown";
}

int popcount(Mask m) { return std::popcount(m); }

Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) m |= element_bit(e);
  return m;
}

std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  for (int e = 1; m != 0; ++e, m >>= 1) {
    if (m & 1) out.push_back(e);
  }
  return out;
}

std::string set_to_string(Mask m) {
  std::ostringstream ss;
  bool first = true;
  for (int e : elements_of(m)) {
    if (!first) ss << ' ';
    ss << e;
    first = false;
  }
  return ss.str();
}

bool set_lex_less(Mask a, Mask b) {
  if (a == b) return false;
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  // Same size: the set owning the lowest differing bit starts with a smaller
  // element at the first position where the sorted lists differ.
  Mask d = a ^ b;
  Mask low = d & (~d + 1);
  return (a & low) != 0;
}

Matroid::Matroid(int n, std::vector<Mask> bases, bool validate) : n_(n), bases_(std::move(bases)) {
  if (n_ < 0 || n_ > kMaxGroundSetSize)
    fail(Errc::ground_set_too_large, "ground set size " + std::to_string(n_) +
                                         " outside supported range 0.." +
                                         std::to_string(kMaxGroundSetSize));
  if (bases_.empty()) fail(Errc::validation_error, "a matroid needs at least one basis");
  for (Mask b : bases_) {
    if ((b & ~full_mask(n_)) != 0)
      fail(Errc::validation_error, "basis contains an element outside 1.." + std::to_string(n_));
  }
  rank_ = popcount(bases_[0]);
  for (Mask b : bases_) {
    if (popcount(b) != rank_)
      fail(Errc::non_uniform_bases, "bases of different sizes: {" + set_to_string(bases_[0]) +
                                        "} vs {" + set_to_string(b) + "}");
  }
  std::sort(bases_.begin(), bases_.end(), set_lex_less);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());

  if (validate) {
    std::unordered_set<Mask> basis_set(bases_.begin(), bases_.end());
    for (Mask a : bases_) {
      for (Mask b : bases_) {
        if (a == b) continue;
        Mask only_a = a & ~b;
        for (int x : elements_of(only_a)) {
          bool exchanged = false;
          for (int y : elements_of(b & ~a)) {
            if (basis_set.count((a & ~element_bit(x)) | element_bit(y))) {
              exchanged = true;
              break;
            }
          }
          if (!exchanged)
            fail(Errc::exchange_violation, "exchange fails for A={" + set_to_string(a) +
                                               "}, a=" + std::to_string(x) + ", B={" +
                                               set_to_string(b) + "}");
        }
      }
    }
  }
  build_tables();
}

void Matroid::build_tables() {
  const std::size_t total = std::size_t{1} << n_;
  independent_.assign(total, 0);
  for (Mask b : bases_) independent_[b] = 1;
  // Downward closure: every subset of an independent set is independent.
  for (Mask m = static_cast<Mask>(total - 1);; --m) {
    if (independent_[m]) {
      Mask rest = m;
      while (rest) {
        Mask low = rest & (~rest + 1);
        independent_[m ^ low] = 1;
        rest ^= low;
      }
    }
    if (m == 0) break;
  }
  rank_table_.assign(total, 0);
  for (Mask m = 1; m < total; ++m) {
    if (independent_[m]) {
      rank_table_[m] = static_cast<std::uint8_t>(popcount(m));
    } else {
      std::uint8_t best = 0;
      Mask rest = m;
      while (rest) {
        Mask low = rest & (~rest + 1);
        best = std::max(best, rank_table_[m ^ low]);
        rest ^= low;
      }
      rank_table_[m] = best;
    }
  }
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
  std::vector<Mask> masks;
  masks.reserve(bases.size());
  for (const auto& list : bases) {
    for (int e : list) {
      if (e < 1 || e > n)
        fail(Errc::validation_error, "basis element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
    masks.push_back(mask_of(list));
  }
  return Matroid(n, std::move(masks), /*validate=*/true);
}

Matroid Matroid::from_basis_masks(int n, std::vector<Mask> bases) {
  return Matroid(n, std::move(bases), /*validate=*/true);
}

Matroid Matroid::trusted(int n, std::vector<Mask> bases) {
  return Matroid(n, std::move(bases), /*validate=*/false);
}

bool Matroid::is_circuit(Mask x) const {
  if (x == 0 || independent(x)) return false;
  Mask rest = x;
  while (rest) {
    Mask low = rest & (~rest + 1);
    if (!independent(x ^ low)) return false;
    rest ^= low;
  }
  return true;
}

Mask Matroid::closure(Mask x) const {
  Mask cl = x;
  int r = rank_of(x);
  for (int e = 1; e <= n_; ++e) {
    if (cl & element_bit(e)) continue;
    if (rank_of(x | element_bit(e)) == r) cl |= element_bit(e);
  }
  return cl;
}

Mask Matroid::loops() const {
  Mask all = 0;
  for (Mask b : bases_) all |= b;
  return ground_set() & ~all;
}

Mask Matroid::coloops() const {
  Mask common = ground_set();
  for (Mask b : bases_) common &= b;
  return common;
}

Matroid uniform_matroid(int r, int n) {
  if (r < 0 || n < 0 || r > n || n > kMaxGroundSetSize)
    fail(Errc::bad_parameters, "uniform matroid U_{" + std::to_string(r) + "," + std::to_string(n) + "}");
  std::vector<Mask> bases;
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (popcount(m) == r) bases.push_back(m);
    if (n == 0) break;
  }
  return Matroid::trusted(n, std::move(bases));
}

int rank_of(const Matroid& m, Mask x) {
  if ((x & ~m.ground_set()) != 0) fail(Errc::validation_error, "subset outside the ground set");
  return m.rank_of(x);
}

std::vector<Mask> circuits(const Matroid& m) {
  std::vector<Mask> out;
  const Mask all = m.ground_set();
  for (Mask x = 1; x <= all && all != 0; ++x) {
    if (popcount(x) <= m.rank() + 1 && m.is_circuit(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), set_lex_less);
  return out;
}

Matroid dual(const Matroid& m) {
  std::vector<Mask> bases;
  bases.reserve(m.basis_count());
  const Mask all = m.ground_set();
  for (Mask b : m.bases()) bases.push_back(all & ~b);
  return Matroid::trusted(m.size(), std::move(bases));
}

std::vector<int> minor_relabeling(int n, Mask removed) {
  std::vector<int> old_of_new;
  for (int e = 1; e <= n; ++e) {
    if (!(removed & element_bit(e))) old_of_new.push_back(e);
  }
  return old_of_new;
}

Matroid minor(const Matroid& m, Mask contract, Mask remove) {
  if ((contract & remove) != 0)
    fail(Errc::overlapping_sets, "contraction and deletion sets overlap on {" +
                                     set_to_string(contract & remove) + "}");
  if (((contract | remove) & ~m.ground_set()) != 0)
    fail(Errc::validation_error, "minor sets outside the ground set");
  const std::vector<int> keep = minor_relabeling(m.size(), contract | remove);
  const int n2 = static_cast<int>(keep.size());
  const int rc = m.rank_of(contract);
  const Mask kept = m.ground_set() & ~(contract | remove);
  // r(M/C \ D) = r_M(kept | C) - r_M(C)
  const int target = m.rank_of(kept | contract) - rc;
  std::vector<Mask> bases;
  const Mask lim = full_mask(n2);
  for (Mask x = 0;; ++x) {
    if (popcount(x) == target) {
      Mask orig = 0;
      for (int i = 0; i < n2; ++i) {
        if (x & (Mask{1} << i)) orig |= element_bit(keep[i]);
      }
      if (m.rank_of(orig | contract) - rc == target) bases.push_back(x);
    }
    if (x == lim) break;
  }
  return Matroid::trusted(n2, std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  const int n = a.size() + b.size();
  if (n > kMaxGroundSetSize) fail(Errc::ground_set_too_large, "direct sum exceeds supported ground set size");
  std::vector<Mask> bases;
  bases.reserve(a.basis_count() * b.basis_count());
  for (Mask x : a.bases()) {
    for (Mask y : b.bases()) bases.push_back(x | (y << a.size()));
  }
  return Matroid::trusted(n, std::move(bases));
}

Matroid free_extend(const Matroid& m) {
  if (m.rank() == 0) fail(Errc::rank_zero, "free extension of a rank-0 matroid");
  if (m.size() + 1 > kMaxGroundSetSize) fail(Errc::ground_set_too_large, "free extension exceeds supported size");
  std::vector<Mask> bases = m.bases();
  const Mask fresh = element_bit(m.size() + 1);
  for (Mask x = 0; x <= m.ground_set(); ++x) {
    if (popcount(x) == m.rank() - 1 && m.independent(x)) bases.push_back(x | fresh);
    if (m.size() == 0) break;
  }
  return Matroid::trusted(m.size() + 1, std::move(bases));
}

Matroid truncate_to(const Matroid& m, int target_rank) {
  if (target_rank < 1 || target_rank > m.rank())
    fail(Errc::bad_target_rank, "cannot truncate rank " + std::to_string(m.rank()) + " to " +
                                    std::to_string(target_rank));
  Matroid cur = m;
  for (int r = m.rank(); r > target_rank; --r) {
    Matroid ext = free_extend(cur);
    cur = minor(ext, element_bit(ext.size()), 0);
  }
  return cur;
}

ParallelClasses parallel_classes(const Matroid& m) {
  ParallelClasses out;
  out.loops = m.loops();
  Mask seen = 0;
  for (int e = 1; e <= m.size(); ++e) {
    const Mask eb = element_bit(e);
    if ((out.loops & eb) || (seen & eb)) continue;
    Mask cls = eb;
    for (int f = e + 1; f <= m.size(); ++f) {
      const Mask fb = element_bit(f);
      if (out.loops & fb) continue;
      if (m.rank_of(eb | fb) == 1) cls |= fb;
    }
    seen |= cls;
    out.classes.push_back(cls);
  }
  return out;
}

bool is_connected(const Matroid& m) {
  if (m.size() <= 1) return true;
  const Mask all = m.ground_set();
  for (Mask a = 1; a < all; ++a) {
    if (m.rank_of(a) + m.rank_of(all & ~a) == m.rank()) return false;
  }
  return true;
}

std::optional<VerticalSeparation> find_vertical_separation(const Matroid& m, int k) {
  if (k < 1) fail(Errc::bad_parameters, "vertical connectivity order must be positive");
  if (m.size() > 12)
    fail(Errc::ground_set_too_large, "vertical separation search capped at 12 elements");
  const Mask all = m.ground_set();
  for (int l = 1; l < k; ++l) {
    for (Mask a = 1; a < all; ++a) {
      const Mask b = all & ~a;
      if (popcount(a) < l || popcount(b) < l) continue;
      const int ra = m.rank_of(a), rb = m.rank_of(b);
      if (ra < l || rb < l) continue;
      if (ra + rb - m.rank() < l) return VerticalSeparation{a, b, l};
    }
  }
  return std::nullopt;
}

bool is_vertically_k_connected(const Matroid& m, int k) {
  return !find_vertical_separation(m, k).has_value();
}

Matroid relax_circuit_hyperplane(const Matroid& m, Mask x) {
  if (!m.is_circuit(x))
    fail(Errc::not_circuit_hyperplane, "{" + set_to_string(x) + "} is not a circuit");
  if (m.rank_of(x) != m.rank() - 1 || m.closure(x) != x)
    fail(Errc::not_circuit_hyperplane, "{" + set_to_string(x) + "} is not a hyperplane");
  std::vector<Mask> bases = m.bases();
  bases.push_back(x);
  return Matroid::trusted(m.size(), std::move(bases));
}

}  // namespace lpbc
