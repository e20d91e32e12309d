#include "krc/tableau.hpp"

#include <algorithm>
#include <string>

namespace krc::tab {

Tableau::Tableau(int rows, int cols, std::vector<int> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != rows_ * cols_)
    throw DomainError("tableau cell count does not match shape");
}

Tableau highest_weight_tableau(const Params& p) {
  std::vector<int> cells(static_cast<size_t>(p.i) * p.m);
  for (int r = 1; r <= p.i; ++r)
    for (int c = 1; c <= p.m; ++c) cells[(r - 1) * p.m + c - 1] = r;
  return Tableau(p.i, p.m, std::move(cells));
}

bool is_semistandard(const Tableau& t) {
  for (int r = 1; r <= t.rows(); ++r)
    for (int c = 1; c <= t.cols(); ++c) {
      if (t.at(r, c) < 1) return false;
      if (c > 1 && t.at(r, c - 1) > t.at(r, c)) return false;
      if (r > 1 && t.at(r - 1, c) >= t.at(r, c)) return false;
    }
  return true;
}

bool is_valid(const Tableau& t, const Params& p) {
  if (t.rows() != p.i || t.cols() != p.m) return false;
  if (!is_semistandard(t)) return false;
  for (int v : t.cells())
    if (v > p.n + 1) return false;
  return true;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(t.rows()) * t.cols());
  for (int r = t.rows(); r >= 1; --r)
    for (int c = 1; c <= t.cols(); ++c) w.push_back(t.at(r, c));
  return w;
}

std::string word_string(const std::vector<int>& word, int n) {
  std::string out;
  const bool digits = n + 1 <= 9;
  for (size_t k = 0; k < word.size(); ++k) {
    if (!digits && k > 0) out += ',';
    out += std::to_string(word[k]);
  }
  return out;
}

Pairing signature_pairing(const std::vector<int>& word, int j) {
  // j+1 opens, j closes; a j with no open j+1 to its left stays unpaired.
  std::vector<int> open;
  std::vector<int> unpaired;
  for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
    if (word[pos] == j + 1) {
      open.push_back(pos);
    } else if (word[pos] == j) {
      if (!open.empty())
        open.pop_back();
      else
        unpaired.push_back(pos);
    }
  }
  Pairing pr;
  pr.phi = static_cast<int>(unpaired.size());
  pr.eps = static_cast<int>(open.size());
  if (!unpaired.empty()) pr.f_pos = unpaired.back();
  if (!open.empty()) pr.e_pos = open.front();
  return pr;
}

std::optional<std::vector<int>> word_apply(const std::vector<int>& word, Dir dir, int j) {
  const Pairing pr = signature_pairing(word, j);
  std::vector<int> out = word;
  if (dir == Dir::F) {
    if (pr.phi == 0) return std::nullopt;
    out[pr.f_pos] = j + 1;
  } else {
    if (pr.eps == 0) return std::nullopt;
    out[pr.e_pos] = j;
  }
  return out;
}

namespace {

// Reading-word position -> (row, col), bottom row first.
std::pair<int, int> word_pos_to_cell(const Tableau& t, int pos) {
  const int from_bottom = pos / t.cols();
  return {t.rows() - from_bottom, pos % t.cols() + 1};
}

std::optional<Tableau> apply_classical(const Tableau& t, Dir dir, int j) {
  const Pairing pr = signature_pairing(reading_word(t), j);
  Tableau out = t;
  if (dir == Dir::F) {
    if (pr.phi == 0) return std::nullopt;
    auto [r, c] = word_pos_to_cell(t, pr.f_pos);
    out.set(r, c, j + 1);
  } else {
    if (pr.eps == 0) return std::nullopt;
    auto [r, c] = word_pos_to_cell(t, pr.e_pos);
    out.set(r, c, j);
  }
  return out;
}

}  // namespace

StringStats string_stats(const Tableau& t, int l, const Params& p) {
  if (l == 0) return string_stats(promotion(t, p), 1, p);
  const Pairing pr = signature_pairing(reading_word(t), l);
  return StringStats{pr.eps, pr.phi};
}

std::optional<Tableau> apply(const Tableau& t, Dir dir, int l, const Params& p) {
  if (l != 0) return apply_classical(t, dir, l);
  auto moved = apply_classical(promotion(t, p), dir, 1);
  if (!moved) return std::nullopt;
  return inverse_promotion(*moved, p);
}

namespace {

constexpr int kHole = 0;

// Slides one hole north-west through g until both neighbours are holes or
// the boundary. The entering value is forced: the larger of the north and
// west neighbours (north on ties) is the only choice keeping rows weak
// and columns strict.
void slide_hole_nw(Tableau& g, int r, int c) {
  for (;;) {
    const int north = r > 1 ? g.at(r - 1, c) : kHole;
    const int west = c > 1 ? g.at(r, c - 1) : kHole;
    if (north == kHole && west == kHole) break;
    if (north >= west) {
      g.set(r, c, north);
      g.set(--r, c, kHole);
    } else {
      g.set(r, c, west);
      g.set(r, --c, kHole);
    }
  }
}

// South-east mirror; the smaller of the south and east neighbours enters
// (south on ties). Missing neighbours count as +infinity.
void slide_hole_se(Tableau& g, int r, int c) {
  constexpr int kInf = 1 << 28;
  for (;;) {
    const int south = r < g.rows() ? g.at(r + 1, c) : kHole;
    const int east = c < g.cols() ? g.at(r, c + 1) : kHole;
    const int sv = south == kHole ? kInf : south;
    const int ev = east == kHole ? kInf : east;
    if (sv == kInf && ev == kInf) break;
    if (sv <= ev) {
      g.set(r, c, south);
      g.set(++r, c, kHole);
    } else {
      g.set(r, c, east);
      g.set(r, ++c, kHole);
    }
  }
}

}  // namespace

Tableau promotion(const Tableau& t, const Params& p) {
  Tableau g = t;
  // The n+1 entries form a suffix of the last row. Delete them and slide
  // the holes away left to right; each ends in the first row.
  int first = t.cols() + 1;
  for (int c = t.cols(); c >= 1 && g.at(t.rows(), c) == p.n + 1; --c) first = c;
  for (int c = first; c <= t.cols(); ++c) g.set(t.rows(), c, kHole);
  for (int c = first; c <= t.cols(); ++c) slide_hole_nw(g, t.rows(), c);
  for (int r = 1; r <= g.rows(); ++r)
    for (int c = 1; c <= g.cols(); ++c) g.set(r, c, g.at(r, c) + 1);
  return g;
}

Tableau inverse_promotion(const Tableau& t, const Params& p) {
  Tableau g = t;
  // The 1 entries form a prefix of the first row; mirror of promotion.
  int last = 0;
  for (int c = 1; c <= t.cols() && g.at(1, c) == 1; ++c) last = c;
  for (int c = 1; c <= last; ++c) g.set(1, c, kHole);
  for (int c = last; c >= 1; --c) slide_hole_se(g, 1, c);
  for (int r = 1; r <= g.rows(); ++r)
    for (int c = 1; c <= g.cols(); ++c) {
      const int v = g.at(r, c);
      g.set(r, c, v == kHole ? p.n + 1 : v - 1);
    }
  return g;
}

Weight weight(const Tableau& t, const Params& p) {
  Weight w{std::vector<int>(p.n + 1, 0)};
  for (int v : t.cells()) w.coords[v - 1] += 1;
  return w;
}

MultiplicityMatrix to_matrix(const Tableau& t, const Params& p) {
  MultiplicityMatrix m;
  m.rows = p.i;
  m.cols = p.n + 2 - p.i;
  m.entries.assign(static_cast<size_t>(m.rows) * m.cols, 0);
  for (int r = 1; r <= t.rows(); ++r)
    for (int c = 1; c <= t.cols(); ++c) {
      const int v = t.at(r, c);
      m.at(r, v - r + 1) += 1;
    }
  return m;
}

Tableau from_matrix(const MultiplicityMatrix& m, const Params& p) {
  if (m.rows != p.i || m.cols != p.n + 2 - p.i)
    throw DomainError("multiplicity matrix shape does not match parameters");
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(p.i) * p.m);
  for (int s = 1; s <= m.rows; ++s) {
    int count = 0;
    for (int t = 1; t <= m.cols; ++t) {
      if (m.at(s, t) < 0) throw DomainError("negative multiplicity");
      count += m.at(s, t);
      for (int k = 0; k < m.at(s, t); ++k) cells.push_back(s + t - 1);
    }
    if (count != p.m)
      throw DomainError("row " + std::to_string(s) + " multiplicities sum to " +
                        std::to_string(count) + ", expected " + std::to_string(p.m));
  }
  Tableau t(p.i, p.m, std::move(cells));
  if (!is_semistandard(t)) throw DomainError("matrix reconstruction violates column strictness");
  return t;
}

namespace {

void enumerate_rec(const Params& p, Tableau& t, int r, int c, std::vector<Tableau>& out) {
  if (r > p.i) {
    out.push_back(t);
    return;
  }
  const int nr = c == p.m ? r + 1 : r;
  const int nc = c == p.m ? 1 : c + 1;
  int lo = 1;
  if (c > 1) lo = std::max(lo, t.at(r, c - 1));
  if (r > 1) lo = std::max(lo, t.at(r - 1, c) + 1);
  const int hi = p.n + 1 - (p.i - r);  // room for the strict column below
  for (int v = lo; v <= hi; ++v) {
    t.set(r, c, v);
    enumerate_rec(p, t, nr, nc, out);
  }
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const Params& p) {
  std::vector<Tableau> out;
  Tableau t(p.i, p.m, std::vector<int>(static_cast<size_t>(p.i) * p.m, 0));
  enumerate_rec(p, t, 1, 1, out);
  return out;
}

}  // namespace krc::tab
