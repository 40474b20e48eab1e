#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpbc/bicircular.hpp"
#include "lpbc/catalog.hpp"
#include "lpbc/latticepath.hpp"

namespace lpbc {

struct ClassifierConfig {
  std::uint64_t node_budget = kDefaultNodeBudget;
  int max_elements = 10;        // cap for membership decisions
  int lpm_corpus_max = 8;       // m + r bound for the lattice path corpus
  int graph_corpus_edges = 7;   // bounds for the bicircular corpus
  int graph_corpus_vertices = 4;
};

struct Verdict {
  bool member = false;
  std::optional<MinorWitness> witness;  // forbidden minor, when one was found
  enum Method { theorem1, direct } method = theorem1;
  bool lattice_path_side = false;  // direct method: per-class results
  bool bicircular_side = false;
  std::optional<MultiGraph> representation;  // direct method: found graph
  std::uint64_t nodes_used = 0;
};

// Membership in the intersection class via the 19 excluded minors,
// scanned in increasing element count.
Verdict member_theorem1(const Matroid& m, const ClassifierConfig& cfg = {});

// Membership decided directly: lattice path (excluded-minor test) and
// bicircular (slot search) sides separately.
Verdict member_direct(const Matroid& m, const ClassifierConfig& cfg = {});

// All lattice path matroids on regions with m + r <= max_n, deduplicated by
// isomorphism; deterministic order of first appearance.
std::vector<Matroid> enumerate_lpm_corpus(int max_n);

// All bicircular matroids of multigraphs with at most max_edges edges on at
// most max_vertices vertices, up to edge-multiset and vertex permutation,
// deduplicated by isomorphism.
std::vector<Matroid> enumerate_bicircular_corpus(int max_edges, int max_vertices);

struct ReportLine {
  bool pass = false;
  std::string check_id;
  std::string subject;
  std::string witness;  // optional
};

struct Report {
  std::vector<ReportLine> lines;
  int failures = 0;
  std::string to_text() const;
};

// The full characterization harness: non-membership and group pattern for
// all 19 entries, membership of every single-element deletion and
// contraction, and the theorem1/direct biconditional over both corpora.
Report verify_theorem1(const ClassifierConfig& cfg = {});

}  // namespace lpbc
