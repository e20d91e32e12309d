#include "krc/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "krc/path_stats.hpp"

namespace krc::graph {

namespace {

Element highest_weight_element(const Params& p, Model model) {
  if (model == Model::tableau) return tab::highest_weight_tableau(p);
  return poly::highest_weight_point(p);
}

std::optional<Element> apply_with_ties(const Element& e, Dir dir, int l, const Params& p,
                                       poly::TieBreak tb) {
  if (model_of(e) == Model::polytope) {
    auto r = poly::apply(std::get<poly::PolytopePoint>(e), dir, l, p, tb);
    if (!r) return std::nullopt;
    return Element(std::move(*r));
  }
  return element_apply(e, dir, l, p);
}

}  // namespace

CrystalGraph build_graph(const Params& p, Model model, bool include_affine, poly::TieBreak tb,
                         int size_cap) {
  CrystalGraph g;
  g.params = p;
  g.model = model;
  g.affine = include_affine;

  std::vector<int> labels;
  for (int l = 1; l <= p.n; ++l) labels.push_back(l);
  if (include_affine) labels.push_back(0);

  std::unordered_map<std::string, int> index;
  std::deque<std::pair<Element, int>> queue;
  auto intern = [&](const Element& e) {
    std::string key = encode_element(e);
    auto it = index.find(key);
    if (it != index.end()) return std::pair<int, bool>{it->second, false};
    const int id = static_cast<int>(g.vertices.size());
    if (size_cap > 0 && id >= size_cap)
      throw DomainError("crystal closure exceeded the size cap of " + std::to_string(size_cap));
    index.emplace(std::move(key), id);
    g.vertices.push_back(encode_element(e));
    return std::pair<int, bool>{id, true};
  };

  const Element root = highest_weight_element(p, model);
  g.root = intern(root).first;
  queue.emplace_back(root, g.root);
  while (!queue.empty()) {
    auto [cur, id] = std::move(queue.front());
    queue.pop_front();
    for (int l : labels) {
      if (auto down = apply_with_ties(cur, Dir::F, l, p, tb)) {
        auto [did, fresh] = intern(*down);
        g.edges.push_back({id, l, did});
        if (fresh) queue.emplace_back(std::move(*down), did);
      }
      if (auto up = apply_with_ties(cur, Dir::E, l, p, tb)) {
        auto [uid, fresh] = intern(*up);
        if (fresh) queue.emplace_back(std::move(*up), uid);
      }
    }
  }
  return g;
}

tab::Tableau transport_image(const poly::PolytopePoint& a, const Params& p) {
  const words::OperatorWord w = words::word_full_path(a, p);
  Element img = words::apply_word(w, tab::highest_weight_tableau(p), p);
  return std::get<tab::Tableau>(img);
}

std::vector<std::pair<poly::PolytopePoint, tab::Tableau>> transport_iso(const Params& p) {
  std::vector<std::pair<poly::PolytopePoint, tab::Tableau>> out;
  poly::for_each_point(
      p, [&](const poly::PolytopePoint& a) { out.emplace_back(a, transport_image(a, p)); });
  return out;
}

namespace {

// label -> destination, per source vertex; also validates the degree
// bounds that make root propagation a sound isomorphism test.
std::vector<std::map<int, int>> adjacency(const CrystalGraph& g) {
  std::vector<std::map<int, int>> adj(g.vertices.size());
  std::vector<std::map<int, int>> indeg(g.vertices.size());
  for (const auto& e : g.edges) {
    if (!adj[e[0]].emplace(e[1], e[2]).second)
      throw DomainError("vertex has two outgoing edges with one label");
    if (!indeg[e[2]].emplace(e[1], e[0]).second)
      throw DomainError("vertex has two incoming edges with one label");
  }
  return adj;
}

}  // namespace

IsoResult graphs_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
  IsoResult res;
  if (g1.vertex_count() != g2.vertex_count()) {
    res.mismatch = "vertex counts differ: " + std::to_string(g1.vertex_count()) + " vs " +
                   std::to_string(g2.vertex_count());
    return res;
  }
  if (g1.edges.size() != g2.edges.size()) {
    res.mismatch = "edge counts differ";
    return res;
  }
  const auto adj1 = adjacency(g1);
  const auto adj2 = adjacency(g2);
  std::vector<int> map(g1.vertices.size(), -1);
  std::vector<int> seen(g2.vertices.size(), 0);
  std::deque<int> queue;
  map[g1.root] = g2.root;
  seen[g2.root] = 1;
  queue.push_back(g1.root);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int w = map[v];
    auto fail = [&](int label) {
      res.mismatch = "vertex " + g1.vertices[v] + " label " + std::to_string(label);
      return res;
    };
    if (adj1[v].size() != adj2[w].size())
      return fail(adj1[v].empty() ? -1 : adj1[v].begin()->first);
    for (const auto& [label, dst1] : adj1[v]) {
      auto it = adj2[w].find(label);
      if (it == adj2[w].end()) return fail(label);
      const int dst2 = it->second;
      if (map[dst1] == -1) {
        if (seen[dst2]) return fail(label);  // not injective
        map[dst1] = dst2;
        seen[dst2] = 1;
        queue.push_back(dst1);
      } else if (map[dst1] != dst2) {
        return fail(label);
      }
    }
  }
  for (int v = 0; v < g1.vertex_count(); ++v)
    if (map[v] == -1) {
      res.mismatch = "vertex " + g1.vertices[v] + " not reached from the root";
      return res;
    }
  res.ok = true;
  res.vertex_map = std::move(map);
  return res;
}

CrystalGraph dual_graph(const CrystalGraph& g) {
  CrystalGraph d = g;
  d.dualized = !g.dualized;
  d.edges.clear();
  for (const auto& e : g.edges) d.edges.push_back({e[2], e[1], e[0]});
  // The dual's classical highest weight is the unique vertex the original
  // f_l all annihilate.
  std::vector<int> outdeg(g.vertices.size(), 0);
  for (const auto& e : g.edges)
    if (e[1] != 0) outdeg[e[0]]++;
  int root = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (outdeg[v] == 0) {
      if (root != -1) throw DomainError("dual root is not unique");
      root = v;
    }
  if (root == -1) throw DomainError("no classical lowest weight vertex");
  d.root = root;
  return d;
}

CrystalGraph relabel_edges(const CrystalGraph& g, const std::vector<int>& perm) {
  CrystalGraph out = g;
  for (auto& e : out.edges)
    if (e[1] != 0) e[1] = perm[e[1] - 1];
  return out;
}

std::optional<std::vector<int>> find_label_relabeling(const CrystalGraph& g1,
                                                      const CrystalGraph& g2) {
  std::vector<int> perm(g1.params.n);
  for (int l = 1; l <= g1.params.n; ++l) perm[l - 1] = l;
  std::sort(perm.begin(), perm.end());
  do {
    if (graphs_isomorphic(relabel_edges(g1, perm), g2).ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

std::string escape_quotes(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << escape_quotes(g.vertices[v]) << "\"];\n";
  for (const auto& e : g.edges) {
    os << "  v" << e[0] << " -> v" << e[2] << " [label=" << e[1];
    if (e[1] == 0) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const CrystalGraph& g) {
  std::string out = "{\"vertices\":[";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v) out += ',';
    out += g.vertices[v];  // already canonical JSON objects
  }
  out += "],\"edges\":[";
  for (size_t k = 0; k < g.edges.size(); ++k) {
    if (k) out += ',';
    out += '[' + std::to_string(g.edges[k][0]) + ',' + std::to_string(g.edges[k][1]) + ',' +
           std::to_string(g.edges[k][2]) + ']';
  }
  out += "],\"root\":" + std::to_string(g.root) + "}";
  return out;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass && !c.informational) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  int failed = 0;
  for (const auto& c : checks) {
    const char* tag = c.informational ? "info" : (c.pass ? " ok " : "FAIL");
    if (!c.pass && !c.informational) failed++;
    os << "[" << tag << "] (" << c.params.n << "," << c.params.i << "," << c.params.m << ") "
       << c.check;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
  int asserted = 0;
  for (const auto& c : checks) asserted += c.informational ? 0 : 1;
  os << (failed == 0 ? "all " : "") << asserted - failed << " of " << asserted
     << " checks passed\n";
  return os.str();
}

std::vector<Params> param_range(int n_max, int m_max) {
  std::vector<Params> out;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i)
      for (int m = 1; m <= m_max; ++m) out.push_back(Params{n, i, m});
  return out;
}

namespace {

struct SuiteRun {
  const Params& p;
  const VerifyOptions& opts;
  std::vector<CheckResult>& out;

  void record(const std::string& check, bool pass, const std::string& detail = "",
              bool informational = false) {
    out.push_back(CheckResult{p, check, pass, informational, detail});
  }

  void run() {
    const auto points = poly::enumerate_points(p);
    const auto tableaux = tab::enumerate_tableaux(p);
    const long long expected = hook_content_count(p);

    record("cardinality",
           static_cast<long long>(points.size()) == expected &&
               static_cast<long long>(tableaux.size()) == expected,
           std::to_string(points.size()) + " points, " + std::to_string(tableaux.size()) +
               " tableaux, hook content " + std::to_string(expected));

    check_model(points);
    check_model(tableaux);
    check_path_words(points);
    check_explicit_images(points);
    check_graphs();
    if (opts.min_entry_diagnostic) min_entry_diagnostic(points);
  }

  template <typename T>
  void check_model(const std::vector<T>& elems) {
    constexpr bool is_poly = std::is_same_v<T, poly::PolytopePoint>;
    const char* name = is_poly ? "polytope" : "tableau";
    std::string bad;
    for (const T& x : elems) {
      const Element e(x);
      const Weight w = element_weight(e, p);
      for (int l = 0; l <= p.n; ++l) {
        const ElementStats st = element_stats(e, l, p);
        // Seminormality against the weight pairing.
        if (st.phi - st.eps != coroot_pairing(w, l)) {
          bad = encode_element(e) + " label " + std::to_string(l) + ": phi-eps mismatch";
          break;
        }
        const auto down = element_apply(e, Dir::F, l, p);
        const auto up = element_apply(e, Dir::E, l, p);
        if ((down != std::nullopt) != (st.phi > 0) || (up != std::nullopt) != (st.eps > 0)) {
          bad = encode_element(e) + " label " + std::to_string(l) + ": stats vs annihilation";
          break;
        }
        // Closure and inverse pairing, plus the weight step.
        if (down) {
          const bool member =
              is_poly ? poly::is_member(std::get<poly::PolytopePoint>(*down), p)
                      : tab::is_valid(std::get<tab::Tableau>(*down), p);
          const auto back = element_apply(*down, Dir::E, l, p);
          if (!member || !back || !(*back == e) ||
              !(element_weight(*down, p) == w - classical_simple_root(l, p.n))) {
            bad = encode_element(e) + " label " + std::to_string(l) + ": f-edge invalid";
            break;
          }
        }
        if (up) {
          const bool member = is_poly ? poly::is_member(std::get<poly::PolytopePoint>(*up), p)
                                      : tab::is_valid(std::get<tab::Tableau>(*up), p);
          const auto back = element_apply(*up, Dir::F, l, p);
          if (!member || !back || !(*back == e)) {
            bad = encode_element(e) + " label " + std::to_string(l) + ": e-edge invalid";
            break;
          }
        }
      }
      if (!bad.empty()) break;
    }
    record(std::string(name) + " seminormality/closure/pairing", bad.empty(), bad);
  }

  void check_path_words(const std::vector<poly::PolytopePoint>& points) {
    std::string bad;
    const poly::PolytopePoint zero = poly::highest_weight_point(p);
    for (const auto& a : points) {
      try {
        const Element got = words::apply_word(words::word_full_path(a, p), Element(zero), p);
        if (!(std::get<poly::PolytopePoint>(got) == a)) {
          bad = "full path misses " + encode_element(Element(a));
          break;
        }
        // Step-path machinery: increments sum to phi and telescope.
        for (int s = 1; s < p.i; ++s) {
          const auto b = stats::stat_bundle(a, s);
          int total = 0;
          for (int r = p.i; r <= p.n; ++r) total += b.increment(r);
          if (total != poly::string_stats(a, s, p).phi) {
            bad = "increment sum != phi at " + encode_element(Element(a));
            break;
          }
          stats::saturate(a, s, p);  // throws on closed-form/iteration mismatch
        }
      } catch (const Error& err) {
        bad = std::string(err.what()) + " at " + encode_element(Element(a));
      }
      if (!bad.empty()) break;
    }
    record("path words and step-path statistics", bad.empty(), bad);
  }

  void check_explicit_images(const std::vector<poly::PolytopePoint>& points) {
    if (p.i > 2 && p.i < p.n - 1) return;
    std::string bad;
    for (const auto& a : points) {
      try {
        const tab::Tableau via_transport = transport_image(a, p);
        if (p.i <= 2) {
          const Element got =
              words::apply_word(words::word_P_small_i(a, p), Element(poly::highest_weight_point(p)), p);
          if (!(std::get<poly::PolytopePoint>(got) == a)) {
            bad = "lowering-only P word misses " + encode_element(Element(a));
            break;
          }
          if (!(words::explicit_image_small_i(a, p) == via_transport)) {
            bad = "small-i explicit image differs from transport at " + encode_element(Element(a));
            break;
          }
        }
        if (p.i >= p.n - 1) {
          const Element got =
              words::apply_word(words::word_Q_large_i(a, p), Element(poly::highest_weight_point(p)), p);
          if (!(std::get<poly::PolytopePoint>(got) == a)) {
            bad = "lowering-only Q word misses " + encode_element(Element(a));
            break;
          }
          if (!(words::explicit_image_large_i(a, p) == via_transport)) {
            bad = "large-i explicit image differs from transport at " + encode_element(Element(a));
            break;
          }
        }
      } catch (const Error& err) {
        bad = std::string(err.what()) + " at " + encode_element(Element(a));
      }
      if (!bad.empty()) break;
    }
    record("lowering-only words and explicit images", bad.empty(), bad);
  }

  void check_graphs() {
    std::string bad;
    try {
      const int cap = static_cast<int>(4 * hook_content_count(p)) + 64;
      const CrystalGraph gp = build_graph(p, Model::polytope, true, opts.tie_break, cap);
      const CrystalGraph gt = build_graph(p, Model::tableau, true, poly::TieBreak::standard, cap);
      if (gp.vertex_count() != static_cast<int>(hook_content_count(p)))
        bad = "polytope closure has " + std::to_string(gp.vertex_count()) + " vertices";
      else {
        const IsoResult iso = graphs_isomorphic(gp, gt);
        if (!iso.ok) bad = "graphs differ: " + iso.mismatch;
      }
    } catch (const Error& err) {
      bad = err.what();
    }
    record("affine graph isomorphism", bad.empty(), bad);
  }

  // Reported, never asserted: minimum of matrix column k of the image
  // versus the minimum over the anti-diagonal s + t = k + 1 of the point.
  void min_entry_diagnostic(const std::vector<poly::PolytopePoint>& points) {
    int agree = 0, total = 0;
    for (const auto& a : points) {
      const tab::MultiplicityMatrix mm = tab::to_matrix(transport_image(a, p), p);
      for (int k = p.i + 1; k <= p.n - p.i + 2; ++k) {
        if (k < 1 || k > mm.cols) continue;
        int lhs = mm.at(1, k);
        for (int r = 2; r <= p.i; ++r) lhs = std::min(lhs, mm.at(r, k));
        int rhs = -1;
        for (int s = 1; s <= p.i; ++s) {
          const int t = k + 1 - s;
          if (t < p.i || t > p.n) continue;
          rhs = rhs == -1 ? a.at(s, t) : std::min(rhs, a.at(s, t));
        }
        if (rhs == -1) continue;
        total++;
        agree += lhs == rhs ? 1 : 0;
      }
    }
    if (total > 0)
      record("min-entry diagnostic", agree == total,
             std::to_string(agree) + "/" + std::to_string(total) + " columns agree", true);
  }
};

}  // namespace

VerifyReport verify_suite(const std::vector<Params>& range, const VerifyOptions& opts) {
  VerifyReport report;
  for (const Params& p : range) {
    SuiteRun run{p, opts, report.checks};
    run.run();
  }
  return report;
}

}  // namespace krc::graph
