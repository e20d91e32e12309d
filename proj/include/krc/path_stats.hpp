// Step-path statistics on a polytope point: the sums S, their maximum M,
// the record-row sequence R, the increments x, and the closed form of the
// saturated lowering operator f_s^{phi_s}.
#pragma once

#include <vector>

#include "krc/polytope.hpp"

namespace krc::stats {

/// Everything the record-row analysis of column s produces. Row-indexed
/// vectors run over r = i..n (offset by i).
struct StatBundle {
  int column = 0;              // s, 1 <= s < i
  int row_start = 0;           // i
  std::vector<int> path_sums;  // S(r)
  int max_sum = 0;             // M = max_r S(r)
  std::vector<int> records;    // r(0) = i-1, ..., r(ell) = n
  std::vector<int> increments; // x(r)

  int ell() const { return static_cast<int>(records.size()) - 1; }
  int path_sum(int r) const { return path_sums[r - row_start]; }
  int increment(int r) const { return increments[r - row_start]; }
};

// Sum of a over the step path down column s to row r, then down column
// s+1 to row n. Requires 1 <= s < i <= r <= n.
int step_path_sum(const poly::PolytopePoint& a, int s, int r);

// Record rows taken greedily (each next record is the last maximizer of S
// beyond the previous one); increments from the telescoped closed form.
StatBundle stat_bundle(const poly::PolytopePoint& a, int s);

// f_s applied exactly phi_s(a) times. Computed both by operator iteration
// and by the closed form (add x on column s, subtract on column s+1); the
// two routes are checked against each other on every call. When pivot_rows
// is given it receives the pivot row of each application in order.
poly::PolytopePoint saturate(const poly::PolytopePoint& a, int s, const Params& p,
                             std::vector<int>* pivot_rows = nullptr);

}  // namespace krc::stats
