#include <doctest.h>

#include <random>

#include "krc/graph.hpp"
#include "krc/polytope.hpp"

using namespace krc;
using poly::PolytopePoint;

namespace {

// Exhaustive Dyck-path maximum; paths from (1,i) to (i,n).
int brute_max_path(const PolytopePoint& a) {
  const int i = a.node(), n = a.rank();
  int best = 0;
  std::vector<std::pair<int, int>> stack{{1, i}};
  std::vector<int> sums{a.at(1, i)};
  while (!stack.empty()) {
    auto [s, t] = stack.back();
    const int sum = sums.back();
    stack.pop_back();
    sums.pop_back();
    if (s == i && t == n) {
      best = std::max(best, sum);
      continue;
    }
    if (t < n) {
      stack.push_back({s, t + 1});
      sums.push_back(sum + a.at(s, t + 1));
    }
    if (s < i) {
      stack.push_back({s + 1, t});
      sums.push_back(sum + a.at(s + 1, t));
    }
  }
  return best;
}

// The example pattern with (i,n) = (3,6): rows t = 3..6.
PolytopePoint stats_fixture() {
  return PolytopePoint(3, 6,
                       {2, 0, 2,
                        0, 1, 2,
                        1, 2, 1,
                        1, 0, 5});
}

poly::StringStats iterated_stats(const PolytopePoint& a, int l, const Params& p) {
  poly::StringStats st;
  for (auto cur = a;;) {
    auto up = poly::apply(cur, Dir::E, l, p);
    if (!up) break;
    cur = *up;
    st.eps++;
  }
  for (auto cur = a;;) {
    auto down = poly::apply(cur, Dir::F, l, p);
    if (!down) break;
    cur = *down;
    st.phi++;
  }
  return st;
}

}  // namespace

TEST_CASE("max dyck sum basics") {
  const Params p = validate_params(5, 3, 9);
  CHECK(poly::max_dyck_sum(poly::highest_weight_point(p)) == 0);

  PolytopePoint corner(3, 5);
  corner.add(1, 3, 9);  // every path starts at (1,i)
  CHECK(poly::max_dyck_sum(corner) == 9);

  CHECK(poly::max_dyck_sum(stats_fixture()) == 12);
  CHECK(brute_max_path(stats_fixture()) == 12);
}

TEST_CASE("max dyck recursion equals exhaustive path enumeration up to n = 6") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      const Params p = validate_params(n, i, 2);
      poly::for_each_point(p, [&](const PolytopePoint& a) {
        CHECK(poly::max_dyck_sum(a) == brute_max_path(a));
      });
    }
  // Larger ranks on arbitrary grids (membership is irrelevant for the max).
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(0, 4);
  for (int n = 5; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> cells(static_cast<size_t>(n - i + 1) * i);
        for (int& v : cells) v = entry(rng);
        const PolytopePoint a(i, n, cells);
        CHECK(poly::max_dyck_sum(a) == brute_max_path(a));
      }
}

TEST_CASE("enumeration is lexicographic, complete, and member-only") {
  const Params p211 = validate_params(2, 1, 1);
  const auto pts = poly::enumerate_points(p211);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == PolytopePoint(1, 2, {0, 0}));
  CHECK(pts[1] == PolytopePoint(1, 2, {0, 1}));
  CHECK(pts[2] == PolytopePoint(1, 2, {1, 0}));

  CHECK(poly::enumerate_points(validate_params(3, 2, 1)).size() == 6);
  CHECK(poly::enumerate_points(validate_params(3, 2, 2)).size() == 20);

  for (const Params& p : graph::param_range(4, 3)) {
    long long count = 0;
    std::vector<int> prev;
    poly::for_each_point(p, [&](const PolytopePoint& a) {
      count++;
      CHECK(poly::is_member(a, p));
      if (!prev.empty()) CHECK(prev < a.entries());
      prev = a.entries();
    });
    CHECK(count == hook_content_count(p));
  }
}

TEST_CASE("pivot examples from the worked path construction") {
  // Element with row 3 = (1,3,1), rows 4 and 5 zero, (m,i,n) = (9,3,5).
  const Params p = validate_params(5, 3, 9);
  PolytopePoint a(3, 5);
  a.add(1, 3, 1);
  a.add(2, 3, 3);
  a.add(3, 3, 1);

  const auto pv = poly::pivots(a, 4);
  CHECK(pv.p == 3);
  CHECK(pv.q == 3);
  CHECK(poly::string_stats(a, 4, p).phi == 5);

  const auto down = poly::apply(a, Dir::F, 4, p);
  REQUIRE(down);
  PolytopePoint expect(3, 5);
  expect.add(1, 3, 1);
  expect.add(2, 3, 3);
  expect.add(3, 4, 1);
  CHECK(*down == expect);

  // All-zero ties: min/max maximizers over a flat landscape.
  const PolytopePoint zero(3, 5);
  const auto flat = poly::pivots(zero, 4);
  CHECK(flat.p == 1);
  CHECK(flat.q == 3);
  const auto swapped = poly::pivots(zero, 4, poly::TieBreak::swapped);
  CHECK(swapped.p == 3);
  CHECK(swapped.q == 1);
}

TEST_CASE("string stats at the highest weight point") {
  const Params p = validate_params(5, 3, 9);
  const PolytopePoint zero = poly::highest_weight_point(p);
  CHECK(poly::string_stats(zero, p.i, p).phi == p.m);
  CHECK(poly::string_stats(zero, 0, p).eps == p.m);
  CHECK(poly::string_stats(zero, 0, p).phi == 0);
  for (int l = 1; l <= p.n; ++l) {
    CHECK(poly::string_stats(zero, l, p).eps == 0);
    CHECK(!poly::apply(zero, Dir::E, l, p));
  }
}

TEST_CASE("string stats equal iteration counts on B^{2,1}, n = 3") {
  const Params p = validate_params(3, 2, 1);
  for (const auto& a : poly::enumerate_points(p))
    for (int l = 0; l <= p.n; ++l) CHECK(poly::string_stats(a, l, p) == iterated_stats(a, l, p));
}

TEST_CASE("affine chain for the one-column crystal") {
  const Params p = validate_params(2, 1, 1);
  const PolytopePoint zero(1, 2), mid(1, 2, {1, 0}), top(1, 2, {0, 1});
  CHECK(poly::apply(zero, Dir::F, 1, p) == mid);
  CHECK(poly::apply(mid, Dir::F, 2, p) == top);
  CHECK(poly::apply(top, Dir::F, 0, p) == zero);
}

TEST_CASE("membership closure and inverse pairing at (3,2,2)") {
  const Params p = validate_params(3, 2, 2);
  for (const auto& a : poly::enumerate_points(p)) {
    for (int l = 0; l <= p.n; ++l) {
      if (auto down = poly::apply(a, Dir::F, l, p)) {
        CHECK(poly::is_member(*down, p));
        CHECK(poly::apply(*down, Dir::E, l, p) == a);
      }
      if (auto up = poly::apply(a, Dir::E, l, p)) {
        CHECK(poly::is_member(*up, p));
        CHECK(poly::apply(*up, Dir::F, l, p) == a);
      }
    }
  }
}

TEST_CASE("weights follow m omega_i minus the root contributions") {
  const Params p539 = validate_params(5, 3, 9);
  CHECK(poly::weight(poly::highest_weight_point(p539), p539).coords ==
        std::vector<int>{9, 9, 9, 0, 0, 0});

  const Params p211 = validate_params(2, 1, 1);
  CHECK(poly::weight(PolytopePoint(1, 2, {0, 1}), p211).coords == std::vector<int>{0, 0, 1});

  const Params p = validate_params(3, 2, 2);
  for (const auto& a : poly::enumerate_points(p)) {
    const Weight w = poly::weight(a, p);
    for (int l = 0; l <= p.n; ++l) {
      const auto st = poly::string_stats(a, l, p);
      CHECK(st.phi - st.eps == coroot_pairing(w, l));
      if (auto down = poly::apply(a, Dir::F, l, p))
        CHECK(poly::weight(*down, p) == w - classical_simple_root(l, p.n));
    }
  }
}
