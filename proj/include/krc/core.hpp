// Core types shared by the tableau and polytope crystal models:
// parameter validation, gl-style content weights, and common enums.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace krc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid (n, i, m) triple.
struct ParamError : Error {
  using Error::Error;
};

// Malformed or invariant-violating element text.
struct DecodeError : Error {
  using Error::Error;
};

// Operator-word evaluation failure (negative symbolic exponent, or
// annihilation under a positive literal exponent).
struct WordError : Error {
  using Error::Error;
};

// Operation called outside its domain (wrong node range, zero element, ...).
struct DomainError : Error {
  using Error::Error;
};

enum class Model { tableau, polytope };

// Crystal operator direction: E raises, F lowers.
enum class Dir { E, F };

inline char dir_char(Dir d) { return d == Dir::E ? 'e' : 'f'; }

/// The triple (n, i, m): rank, Dynkin node, level.
struct Params {
  int n = 1;  // rank, n >= 1
  int i = 1;  // node, 1 <= i <= n
  int m = 1;  // level, m >= 1

  friend bool operator==(const Params&, const Params&) = default;
};

// Validates 1 <= i <= n, m >= 1; throws ParamError naming the violated bound.
Params validate_params(int n, int i, int m);

/// Content coordinates (c_1, ..., c_{n+1}); c_v counts boxes/units of value v.
struct Weight {
  std::vector<int> coords;

  int sum() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator-(Weight lhs, const Weight& rhs);
Weight operator+(Weight lhs, const Weight& rhs);

// Classical projection of the simple root alpha_l as a content vector,
// l in {0,...,n}; alpha_0 projects to e_{n+1} - e_1 (= -theta).
Weight classical_simple_root(int l, int n);

// The positive root alpha_p + ... + alpha_q, i.e. e_p - e_{q+1}.
Weight root_span(int p, int q, int n);

// <w, alpha_l^vee>: c_l - c_{l+1} for l in [n]; c_{n+1} - c_1 for l = 0.
int coroot_pairing(const Weight& w, int l);

// m * omega_i in content coordinates: (m^i, 0^{n+1-i}).
Weight rectangle_weight(const Params& p);

// Number of semistandard Young tableaux of shape (m^i) with entries in
// [n+1], by the hook content formula. Equals |B^{i,m}_n|.
long long hook_content_count(const Params& p);

}  // namespace krc
