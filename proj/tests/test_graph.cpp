#include <doctest.h>

#include <algorithm>
#include <map>

#include "krc/graph.hpp"

using namespace krc;
using graph::CrystalGraph;

TEST_CASE("the one-box affine graph is a labeled 3-cycle") {
  const Params p = validate_params(2, 1, 1);
  const CrystalGraph g = graph::build_graph(p, Model::polytope, true);
  REQUIRE(g.vertex_count() == 3);
  REQUIRE(g.edges.size() == 3);
  CHECK(g.root == 0);
  CHECK(g.vertices[g.root] == R"({"model":"polytope","rows":[[0],[0]]})");

  std::map<int, std::pair<int, int>> by_label;
  for (const auto& e : g.edges) by_label[e[1]] = {e[0], e[2]};
  REQUIRE(by_label.size() == 3);
  // f_1: root -> v, f_2: v -> w, f_0: w -> root.
  const auto [f1s, f1d] = by_label[1];
  const auto [f2s, f2d] = by_label[2];
  const auto [f0s, f0d] = by_label[0];
  CHECK(f1s == g.root);
  CHECK(f2s == f1d);
  CHECK(f0s == f2d);
  CHECK(f0d == g.root);
}

TEST_CASE("closures have the predicted size in both models") {
  const Params p = validate_params(3, 2, 2);
  CHECK(graph::build_graph(p, Model::polytope, false).vertex_count() == 20);
  CHECK(graph::build_graph(p, Model::tableau, false).vertex_count() == 20);
  CHECK(graph::build_graph(p, Model::polytope, true).vertex_count() == 20);
}

TEST_CASE("edge label counts agree across the models") {
  const Params p = validate_params(3, 2, 1);
  const CrystalGraph gp = graph::build_graph(p, Model::polytope, true);
  const CrystalGraph gt = graph::build_graph(p, Model::tableau, true);
  std::map<int, int> cp, ct;
  for (const auto& e : gp.edges) cp[e[1]]++;
  for (const auto& e : gt.edges) ct[e[1]]++;
  CHECK(cp == ct);
}

TEST_CASE("per-label degrees never exceed one") {
  const Params p = validate_params(3, 2, 2);
  for (Model model : {Model::polytope, Model::tableau}) {
    const CrystalGraph g = graph::build_graph(p, model, true);
    std::map<std::pair<int, int>, int> out, in;
    for (const auto& e : g.edges) {
      CHECK(++out[{e[0], e[1]}] == 1);
      CHECK(++in[{e[2], e[1]}] == 1);
    }
  }
}

TEST_CASE("transport images of the one-box crystal") {
  const Params p = validate_params(2, 1, 1);
  CHECK(graph::transport_image(poly::PolytopePoint(1, 2), p) == tab::Tableau(1, 1, {1}));
  CHECK(graph::transport_image(poly::PolytopePoint(1, 2, {1, 0}), p) == tab::Tableau(1, 1, {2}));
  CHECK(graph::transport_image(poly::PolytopePoint(1, 2, {0, 1}), p) == tab::Tableau(1, 1, {3}));
}

TEST_CASE("transport commutes with every operator and preserves weights") {
  const Params p = validate_params(3, 2, 2);
  const auto pairs = graph::transport_iso(p);
  CHECK(pairs.size() == 20);

  std::map<std::string, tab::Tableau> image;
  for (const auto& [a, t] : pairs) image[encode_element(Element(a))] = t;

  for (const auto& [a, t] : pairs) {
    CHECK(poly::weight(a, p) == tab::weight(t, p));
    for (int l = 0; l <= p.n; ++l) {
      const auto pa = poly::apply(a, Dir::F, l, p);
      const auto pt = tab::apply(t, Dir::F, l, p);
      CHECK((pa != std::nullopt) == (pt != std::nullopt));
      if (pa) CHECK(image.at(encode_element(Element(*pa))) == *pt);
      const auto ea = poly::apply(a, Dir::E, l, p);
      const auto et = tab::apply(t, Dir::E, l, p);
      CHECK((ea != std::nullopt) == (et != std::nullopt));
      if (ea) CHECK(image.at(encode_element(Element(*ea))) == *et);
    }
  }
}

TEST_CASE("transport is path independent") {
  const Params small = validate_params(4, 2, 2);
  for (const auto& a : poly::enumerate_points(small)) {
    const Element via_p = words::apply_word(words::word_P_small_i(a, small),
                                            Element(tab::highest_weight_tableau(small)), small);
    CHECK(std::get<tab::Tableau>(via_p) == graph::transport_image(a, small));
  }
  const Params large = validate_params(4, 3, 2);
  for (const auto& a : poly::enumerate_points(large)) {
    const Element via_q = words::apply_word(words::word_Q_large_i(a, large),
                                            Element(tab::highest_weight_tableau(large)), large);
    CHECK(std::get<tab::Tableau>(via_q) == graph::transport_image(a, large));
  }
}

TEST_CASE("root propagation decides labeled isomorphism") {
  const Params p = validate_params(3, 2, 2);
  const CrystalGraph gp = graph::build_graph(p, Model::polytope, true);
  const CrystalGraph gt = graph::build_graph(p, Model::tableau, true);

  const auto self = graph::graphs_isomorphic(gp, gp);
  REQUIRE(self.ok);
  for (int v = 0; v < gp.vertex_count(); ++v) CHECK(self.vertex_map[v] == v);

  CHECK(graph::graphs_isomorphic(gp, gt).ok);

  const CrystalGraph other = graph::build_graph(validate_params(3, 1, 2), Model::polytope, true);
  const auto bad = graph::graphs_isomorphic(gp, other);
  CHECK(!bad.ok);
  CHECK(!bad.mismatch.empty());
}

TEST_CASE("dual graphs reverse arrows and compose to the identity") {
  const Params p211 = validate_params(2, 1, 1);
  const CrystalGraph cycle = graph::build_graph(p211, Model::polytope, true);
  const CrystalGraph rev = graph::dual_graph(cycle);
  CHECK(rev.edges.size() == 3);
  for (const auto& e : cycle.edges) {
    const std::array<int, 3> flipped{e[2], e[1], e[0]};
    CHECK(std::count(rev.edges.begin(), rev.edges.end(), flipped) == 1);
  }

  const Params p = validate_params(3, 2, 1);
  const CrystalGraph g = graph::build_graph(p, Model::polytope, false);
  const CrystalGraph dd = graph::dual_graph(graph::dual_graph(g));
  CHECK(dd.edges == g.edges);
  CHECK(dd.root == g.root);
  CHECK(dd.dualized == g.dualized);
}

TEST_CASE("the dual relabels by reversing the Dynkin diagram") {
  const Params p = validate_params(3, 2, 1);
  const CrystalGraph g = graph::build_graph(p, Model::polytope, false);
  const CrystalGraph dual = graph::dual_graph(g);

  std::vector<int> reverse(p.n);
  for (int l = 1; l <= p.n; ++l) reverse[l - 1] = p.n + 1 - l;
  CHECK(graph::graphs_isomorphic(graph::relabel_edges(dual, reverse), g).ok);
  CHECK(graph::find_label_relabeling(dual, g).has_value());

  // With the node off centre the identity no longer works and the search
  // must discover the diagram reversal.
  const Params q = validate_params(3, 1, 1);
  const CrystalGraph chain = graph::build_graph(q, Model::polytope, false);
  const CrystalGraph chain_dual = graph::dual_graph(chain);
  CHECK(!graph::graphs_isomorphic(chain_dual, chain).ok);
  const auto found = graph::find_label_relabeling(chain_dual, chain);
  REQUIRE(found);
  CHECK(*found == reverse);
}

TEST_CASE("exports are deterministic and carry the labels") {
  const Params p = validate_params(2, 1, 1);
  const CrystalGraph g = graph::build_graph(p, Model::polytope, true);
  const std::string dot = graph::to_dot(g);
  CHECK(dot == graph::to_dot(g));
  CHECK(dot.find("label=0, style=dashed") != std::string::npos);
  CHECK(dot.find("label=1") != std::string::npos);
  const std::string js = graph::to_json(g);
  CHECK(js.find("\"root\":0") != std::string::npos);
  CHECK(js.find("\"edges\":[[") != std::string::npos);
}

TEST_CASE("verify suite passes on the small range and reports mutations") {
  const auto report = graph::verify_suite(graph::param_range(3, 2));
  CHECK(report.all_pass());
  CHECK(!report.checks.empty());

  graph::VerifyOptions mutated;
  mutated.tie_break = poly::TieBreak::swapped;
  const auto broken = graph::verify_suite(graph::param_range(3, 2), mutated);
  CHECK(!broken.all_pass());
  bool iso_failed = false;
  for (const auto& c : broken.checks)
    iso_failed = iso_failed || (c.check == "affine graph isomorphism" && !c.pass);
  CHECK(iso_failed);

  CHECK(graph::verify_suite({}).checks.empty());
  CHECK(graph::verify_suite({}).all_pass());
}
