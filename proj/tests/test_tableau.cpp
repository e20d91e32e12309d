#include <doctest.h>

#include <map>

#include "krc/graph.hpp"
#include "krc/tableau.hpp"

using namespace krc;
using tab::Tableau;

namespace {

std::vector<int> digits(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

// The displayed 3x7 tableau over [6] used for the matrix encoding.
Tableau matrix_fixture() {
  return Tableau(3, 7,
                 {1, 1, 2, 2, 2, 4, 4,
                  2, 3, 3, 3, 4, 5, 5,
                  3, 4, 4, 6, 6, 6, 6});
}

// Stats by brute-force operator iteration.
tab::StringStats iterated_stats(const Tableau& t, int l, const Params& p) {
  tab::StringStats st;
  for (auto cur = t;;) {
    auto up = tab::apply(cur, Dir::E, l, p);
    if (!up) break;
    cur = *up;
    st.eps++;
  }
  for (auto cur = t;;) {
    auto down = tab::apply(cur, Dir::F, l, p);
    if (!down) break;
    cur = *down;
    st.phi++;
  }
  return st;
}

}  // namespace

TEST_CASE("highest weight tableau has row j filled with j and no raising moves") {
  const Params p = validate_params(5, 3, 7);
  const Tableau t = tab::highest_weight_tableau(p);
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 7; ++c) CHECK(t.at(r, c) == r);
  for (int l = 1; l <= p.n; ++l) {
    CHECK(tab::string_stats(t, l, p).eps == 0);
    CHECK(!tab::apply(t, Dir::E, l, p));
  }
  CHECK(tab::string_stats(t, p.i, p).phi == p.m);

  CHECK(tab::highest_weight_tableau(validate_params(2, 1, 1)) == Tableau(1, 1, {1}));
}

TEST_CASE("reading word runs bottom row first") {
  CHECK(tab::reading_word(Tableau(1, 1, {1})) == std::vector<int>{1});
  CHECK(tab::word_string(tab::reading_word(matrix_fixture()), 5) ==
        "344666623334551122244");
  const Params p = validate_params(5, 2, 3);
  CHECK(tab::word_string(tab::reading_word(tab::highest_weight_tableau(p)), p.n) == "222111");
  // Alphabets past 9 fall back to comma separation.
  CHECK(tab::word_string({1, 10, 11}, 10) == "1,10,11");
}

TEST_CASE("signature rule fixture from the displayed word") {
  const std::vector<int> w = digits("21122152731221");
  const auto f = tab::word_apply(w, Dir::F, 1);
  const auto e = tab::word_apply(w, Dir::E, 1);
  REQUIRE(f);
  REQUIRE(e);
  CHECK(*f == digits("21222152731221"));
  CHECK(*e == digits("21112152731221"));
  const auto pr = tab::signature_pairing(w, 1);
  CHECK(pr.phi >= 1);
  CHECK(pr.eps >= 1);
}

TEST_CASE("matrix encoding of the displayed tableau") {
  const Params p = validate_params(5, 3, 7);
  const Tableau t = matrix_fixture();
  const tab::MultiplicityMatrix m = tab::to_matrix(t, p);
  CHECK(m.entries == std::vector<int>{2, 3, 0, 2,
                                      1, 3, 1, 2,
                                      1, 2, 0, 4});
  CHECK(tab::from_matrix(m, p) == t);

  const tab::MultiplicityMatrix hw = tab::to_matrix(tab::highest_weight_tableau(p), p);
  for (int s = 1; s <= 3; ++s)
    for (int c = 1; c <= hw.cols; ++c) CHECK(hw.at(s, c) == (c == 1 ? 7 : 0));
}

TEST_CASE("matrix encoding is a bijection on SSYT(2 omega_2), n = 3") {
  const Params p = validate_params(3, 2, 2);
  const auto all = tab::enumerate_tableaux(p);
  CHECK(all.size() == 20);
  for (const auto& t : all) CHECK(tab::from_matrix(tab::to_matrix(t, p), p) == t);

  SUBCASE("row sum violations are rejected") {
    tab::MultiplicityMatrix m = tab::to_matrix(all.front(), p);
    m.at(1, 1) += 1;
    CHECK_THROWS_AS(tab::from_matrix(m, p), DomainError);
  }
}

TEST_CASE("string stats agree with operator iteration on SSYT(omega_2), n = 3") {
  const Params p = validate_params(3, 2, 1);
  const auto all = tab::enumerate_tableaux(p);
  CHECK(all.size() == 6);
  for (const auto& t : all)
    for (int l = 0; l <= p.n; ++l) CHECK(tab::string_stats(t, l, p) == iterated_stats(t, l, p));
}

TEST_CASE("affine chain for the one-box crystal") {
  const Params p = validate_params(2, 1, 1);
  const Tableau t1(1, 1, {1}), t2(1, 1, {2}), t3(1, 1, {3});
  CHECK(tab::apply(t1, Dir::F, 1, p) == t2);
  CHECK(tab::apply(t2, Dir::F, 2, p) == t3);
  CHECK(tab::apply(t3, Dir::F, 0, p) == t1);
  CHECK(!tab::apply(t1, Dir::F, 2, p));
  CHECK(!tab::apply(t1, Dir::E, 1, p));
}

TEST_CASE("single cell promotion wraps the largest letter") {
  const Params p = validate_params(2, 1, 1);
  CHECK(tab::promotion(Tableau(1, 1, {3}), p) == Tableau(1, 1, {1}));
  CHECK(tab::promotion(Tableau(1, 1, {1}), p) == Tableau(1, 1, {2}));
}

TEST_CASE("promotion and inverse promotion are mutually inverse at small scale") {
  for (const Params& p : graph::param_range(4, 3)) {
    for (const auto& t : tab::enumerate_tableaux(p)) {
      const Tableau fwd = tab::promotion(t, p);
      CHECK(tab::is_valid(fwd, p));
      CHECK(tab::inverse_promotion(fwd, p) == t);
      CHECK(tab::promotion(tab::inverse_promotion(t, p), p) == t);
    }
  }
}

TEST_CASE("promotion rotates every string length by one node") {
  const Params p = validate_params(3, 2, 2);
  for (const auto& t : tab::enumerate_tableaux(p)) {
    const Tableau pr = tab::promotion(t, p);
    for (int l = 0; l <= p.n; ++l) {
      const int rotated = (l + 1) % (p.n + 1);
      CHECK(tab::string_stats(pr, rotated, p) == tab::string_stats(t, l, p));
    }
  }
}

TEST_CASE("operators preserve semistandardness and invert each other") {
  const Params p = validate_params(3, 2, 2);
  for (const auto& t : tab::enumerate_tableaux(p)) {
    for (int l = 0; l <= p.n; ++l) {
      if (auto down = tab::apply(t, Dir::F, l, p)) {
        CHECK(tab::is_valid(*down, p));
        CHECK(tab::apply(*down, Dir::E, l, p) == t);
      }
      if (auto up = tab::apply(t, Dir::E, l, p)) {
        CHECK(tab::is_valid(*up, p));
        CHECK(tab::apply(*up, Dir::F, l, p) == t);
      }
    }
  }
}

TEST_CASE("weights count cell values") {
  const Params p = validate_params(5, 3, 7);
  CHECK(tab::weight(tab::highest_weight_tableau(p), p).coords ==
        std::vector<int>{7, 7, 7, 0, 0, 0});
  CHECK(tab::weight(matrix_fixture(), p).coords == std::vector<int>{2, 4, 4, 5, 2, 4});

  const Params q = validate_params(3, 2, 2);
  for (const auto& t : tab::enumerate_tableaux(q))
    for (int l = 1; l <= q.n; ++l)
      if (auto down = tab::apply(t, Dir::F, l, q))
        CHECK(tab::weight(*down, q) == tab::weight(t, q) - classical_simple_root(l, q.n));
}

TEST_CASE("seminormality links stats to the weight pairing") {
  for (const Params& p : graph::param_range(3, 2)) {
    for (const auto& t : tab::enumerate_tableaux(p)) {
      const Weight w = tab::weight(t, p);
      for (int l = 0; l <= p.n; ++l) {
        const auto st = tab::string_stats(t, l, p);
        CHECK(st.phi - st.eps == coroot_pairing(w, l));
      }
    }
  }
}

// The column description of the signature rule: pair within tableau
// columns first, then match the leftover marks across columns; f_j then
// flips the north-easternmost unpaired j.
TEST_CASE("column pairing oracle agrees with the reading-word rule for wide nodes") {
  for (const Params& p : {validate_params(3, 2, 2), validate_params(3, 3, 2),
                          validate_params(4, 3, 1), validate_params(2, 2, 2)}) {
    REQUIRE(p.i >= p.n - 1);
    for (const auto& t : tab::enumerate_tableaux(p)) {
      for (int j = 1; j <= p.n; ++j) {
        std::vector<std::pair<int, int>> unpaired;  // (row, col) of unpaired j
        std::vector<int> open_cols;
        for (int c = 1; c <= p.m; ++c) {
          int j_row = 0, j1_row = 0;
          for (int r = 1; r <= p.i; ++r) {
            if (t.at(r, c) == j) j_row = r;
            if (t.at(r, c) == j + 1) j1_row = r;
          }
          if (j_row && j1_row) continue;  // paired inside the column
          if (j1_row) open_cols.push_back(c);
          if (j_row) {
            if (!open_cols.empty())
              open_cols.pop_back();
            else
              unpaired.emplace_back(j_row, c);
          }
        }
        const auto down = tab::apply(t, Dir::F, j, p);
        CHECK((down != std::nullopt) == !unpaired.empty());
        if (down) {
          auto pick = unpaired.front();
          for (const auto& cand : unpaired)
            if (cand.first < pick.first || (cand.first == pick.first && cand.second > pick.second))
              pick = cand;
          Tableau expect = t;
          expect.set(pick.first, pick.second, j + 1);
          CHECK(*down == expect);
        }
      }
    }
  }
}
