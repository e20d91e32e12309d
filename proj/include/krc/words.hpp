// Operator words with literal or stat-relative exponents, the inductive
// path constructor for the polytope model, the lowering-only words for
// nodes near the ends of the Dynkin diagram, and the explicit images of
// the crystal isomorphism in those cases.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "krc/element.hpp"

namespace krc::words {

enum class ExpKind {
  literal,    // fixed repetition count
  phi_minus,  // phi_l(current) - a, f-factors only
  eps_minus,  // eps_l(current) - a, e-factors only
};

struct Exponent {
  ExpKind kind = ExpKind::literal;
  int value = 1;  // count for literal; subtrahend a >= 0 otherwise
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct Factor {
  Dir dir = Dir::F;
  int node = 0;
  Exponent exp;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Factors are stored left to right; the RIGHTMOST factor applies first.
struct OperatorWord {
  std::vector<Factor> factors;
  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;
};

// Grammar: whitespace-separated factors, each ("e"|"f") INDEX ["^" EXP]
// with EXP = INT | "{phi" INDEX ["-" INT] "}" | "{eps" INDEX ["-" INT] "}".
// An omitted exponent means 1; a symbolic index must equal the factor's;
// phi attaches to f only and eps to e only. Throws DecodeError with the
// offending position.
OperatorWord parse_word(std::string_view text, int n);

std::string render_word(const OperatorWord& w);

// Evaluates factors right to left against the current element. A symbolic
// exponent that comes out negative throws WordError ("word undefined at
// step k"); annihilation under a positive literal exponent throws
// WordError ("annihilated at step k"). Steps count applied factors.
Element apply_word(const OperatorWord& w, Element start, const Params& p);

// The inductive one-row constructor: maps Q-with-row-k-zeroed to Q, where
// k is the first nonzero row of Q. Throws DomainError on the zero element.
OperatorWord word_K(const poly::PolytopePoint& q, const Params& p);

// Concatenation of word_K over the row truncations of a; applied to the
// highest weight element it produces a. Zero rows contribute nothing.
OperatorWord word_full_path(const poly::PolytopePoint& a, const Params& p);

// Lowering-only path for i <= 2; throws DomainError otherwise.
OperatorWord word_P_small_i(const poly::PolytopePoint& a, const Params& p);

// Lowering-only path for i >= n-1; throws DomainError otherwise.
OperatorWord word_Q_large_i(const poly::PolytopePoint& a, const Params& p);

/// Downward recursion data for i <= 2: Sigma_k and the sign flags chi_k,
/// k = 2..n.
struct SigmaChi {
  int n = 1;
  std::vector<int> sigma_;  // index k-2
  std::vector<int> chi_;

  int sigma(int k) const { return sigma_[k - 2]; }
  int chi(int k) const { return chi_[k - 2]; }
};

SigmaChi sigma_chi(const poly::PolytopePoint& a, const Params& p);

/// Upward recursion data for i >= n-1: Omega_k and nu_k, k = 1..n-1.
struct OmegaNu {
  int n = 1;
  std::vector<int> omega_;  // index k-1
  std::vector<int> nu_;

  int omega(int k) const { return omega_[k - 1]; }
  int nu(int k) const { return nu_[k - 1]; }
};

OmegaNu omega_nu(const poly::PolytopePoint& a, const Params& p);

// Closed-form image of the crystal isomorphism for i <= 2 (the k = 2
// stage of the recursion). Throws DomainError for i >= 3.
tab::Tableau explicit_image_small_i(const poly::PolytopePoint& a, const Params& p);

// Closed-form image for i >= n-1 (stage k = n-1). Throws otherwise.
tab::Tableau explicit_image_large_i(const poly::PolytopePoint& a, const Params& p);

namespace detail {

// Unguarded word formulas and intermediate-stage images, exposed for the
// test suites (the P formula is exercised at i = 3 where it fails).
OperatorWord word_P_formula(const poly::PolytopePoint& a, const Params& p);
OperatorWord word_Q_formula(const poly::PolytopePoint& a, const Params& p);
// Partial words: X_k ... X_n G, respectively Y_k ... Y_1 H.
OperatorWord word_P_partial(const poly::PolytopePoint& a, const Params& p, int k);
OperatorWord word_Q_partial(const poly::PolytopePoint& a, const Params& p, int k);
tab::MultiplicityMatrix image_small_i_at(const poly::PolytopePoint& a, const Params& p, int k);
tab::MultiplicityMatrix image_large_i_at(const poly::PolytopePoint& a, const Params& p, int k);

}  // namespace detail

}  // namespace krc::words
