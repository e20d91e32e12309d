// The semistandard-tableau realization of KR^{i,m}: signature-rule
// operators for the classical nodes, jeu-de-taquin promotion, and the
// affine operators by conjugation with promotion.
#pragma once

#include <optional>
#include <vector>

#include "krc/core.hpp"

namespace krc::tab {

/// Rectangular grid of entries, rows weakly increasing, columns strictly
/// increasing. Shape is (rows x cols) = (i x m), entries in [n+1].
class Tableau {
 public:
  Tableau() = default;
  Tableau(int rows, int cols, std::vector<int> cells);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // 1-based cell access.
  int at(int r, int c) const { return cells_[(r - 1) * cols_ + c - 1]; }
  void set(int r, int c, int v) { cells_[(r - 1) * cols_ + c - 1] = v; }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> cells_;
};

/// Row s holds the multiplicities of the values s, s+1, ..., s+cols-1:
/// entry (s, t) counts occurrences of s + t - 1 in tableau row s.
struct MultiplicityMatrix {
  int rows = 0;  // i
  int cols = 0;  // n + 2 - i
  std::vector<int> entries;

  int at(int s, int t) const { return entries[(s - 1) * cols + t - 1]; }
  int& at(int s, int t) { return entries[(s - 1) * cols + t - 1]; }
  friend bool operator==(const MultiplicityMatrix&, const MultiplicityMatrix&) = default;
};

struct StringStats {
  int eps = 0;
  int phi = 0;
  friend bool operator==(const StringStats&, const StringStats&) = default;
};

// Row j filled with the value j.
Tableau highest_weight_tableau(const Params& p);

bool is_semistandard(const Tableau& t);

// Semistandard, correct shape for p, entries in [n+1].
bool is_valid(const Tableau& t, const Params& p);

// Rows read bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

// Digit string when the alphabet fits in single digits, else
// comma-separated integers.
std::string word_string(const std::vector<int>& word, int n);

/// Signature pairing of a word at letter j: counts unmatched letters and
/// locates the positions the operators act on (-1 when absent).
struct Pairing {
  int eps = 0;    // unpaired j+1
  int phi = 0;    // unpaired j
  int f_pos = -1; // rightmost unpaired j
  int e_pos = -1; // leftmost unpaired j+1
};

Pairing signature_pairing(const std::vector<int>& word, int j);

// f_j / e_j on an abstract word; nullopt when annihilated.
std::optional<std::vector<int>> word_apply(const std::vector<int>& word, Dir dir, int j);

// (eps, phi) at node l in {0,...,n}; node 0 is read off promotion(t) at node 1.
StringStats string_stats(const Tableau& t, int l, const Params& p);

// Crystal operator at node l in {0,...,n}; nullopt when annihilated.
std::optional<Tableau> apply(const Tableau& t, Dir dir, int l, const Params& p);

// Schuetzenberger promotion: delete the n+1 entries, slide the holes to
// the north-west, refill with 0, increment everything.
Tableau promotion(const Tableau& t, const Params& p);

// Two-sided inverse of promotion.
Tableau inverse_promotion(const Tableau& t, const Params& p);

Weight weight(const Tableau& t, const Params& p);

MultiplicityMatrix to_matrix(const Tableau& t, const Params& p);

// Inverse of to_matrix; throws DomainError if row sums differ from m or the
// reconstruction is not semistandard.
Tableau from_matrix(const MultiplicityMatrix& m, const Params& p);

// All tableaux of SSYT(m omega_i), lexicographic in the row-major cells.
std::vector<Tableau> enumerate_tableaux(const Params& p);

}  // namespace krc::tab
