// Crystal graphs by closure, the transported isomorphism between the two
// models, root-anchored labeled-graph comparison, duals, and the
// verification suite driving every structural check at small parameters.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "krc/words.hpp"

namespace krc::graph {

/// Labeled digraph of a crystal. Vertices hold the canonical element
/// text; edges (src, l, dst) mean f_l(src) = dst. Vertex ids follow
/// first-visit order of the closure, so exports are reproducible.
struct CrystalGraph {
  Params params;
  Model model = Model::polytope;
  bool affine = false;    // label 0 edges included
  bool dualized = false;  // arrows carry the dual reading, weights negate
  std::vector<std::string> vertices;
  std::vector<std::array<int, 3>> edges;
  int root = 0;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

// BFS closure from the highest weight element under f_l and e_l for
// l in 1..n (plus 0 when include_affine). A positive size_cap aborts with
// DomainError once exceeded; the verify suite uses it to survive mutated
// operators.
CrystalGraph build_graph(const Params& p, Model model, bool include_affine,
                         poly::TieBreak tb = poly::TieBreak::standard, int size_cap = 0);

// Image of a under the affine crystal isomorphism, computed by replaying
// the polytope-side path word from the highest weight tableau.
tab::Tableau transport_image(const poly::PolytopePoint& a, const Params& p);

// The whole map, in enumeration order of B^{i,m}.
std::vector<std::pair<poly::PolytopePoint, tab::Tableau>> transport_iso(const Params& p);

struct IsoResult {
  bool ok = false;
  std::vector<int> vertex_map;  // g1 id -> g2 id
  std::string mismatch;         // first failing (vertex, label) when !ok
};

// Root-anchored propagation along labeled f-edges. Correct here because
// crystal graphs are reachable from the root under f alone and each label
// is a partial matching.
IsoResult graphs_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

// Arrows reversed, labels kept, weights negated. Involutive.
CrystalGraph dual_graph(const CrystalGraph& g);

// Relabels classical edges by perm (perm[l-1] in [n]); label 0 is fixed.
CrystalGraph relabel_edges(const CrystalGraph& g, const std::vector<int>& perm);

// Searches the permutations of the classical labels for one making g1
// isomorphic to g2.
std::optional<std::vector<int>> find_label_relabeling(const CrystalGraph& g1,
                                                      const CrystalGraph& g2);

std::string to_dot(const CrystalGraph& g);
std::string to_json(const CrystalGraph& g);

struct CheckResult {
  Params params;
  std::string check;
  bool pass = true;
  bool informational = false;  // diagnostics that are reported, never asserted
  std::string detail;
};

struct VerifyOptions {
  poly::TieBreak tie_break = poly::TieBreak::standard;  // mutation hook
  bool min_entry_diagnostic = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string to_text() const;
};

// All (n, i, m) with n <= n_max, i in [n], m <= m_max.
std::vector<Params> param_range(int n_max, int m_max);

// Runs cardinality, seminormality, closure, inverse-pairing, path-word,
// explicit-image and graph-isomorphism checks over the range; failures
// become report content with a counterexample, not exceptions.
VerifyReport verify_suite(const std::vector<Params>& range, const VerifyOptions& opts = {});

}  // namespace krc::graph
