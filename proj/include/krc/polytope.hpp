// The polytope realization B^{i,m}_n: membership through the max-plus
// Dyck-path recursion, lexicographic enumeration, pivot indices, string
// statistics and the crystal operators.
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "krc/core.hpp"

namespace krc::poly {

/// Integer pattern (a_{s,t}) with column index s in [i] and row index
/// t in {i,...,n}. Entries addressed outside that range read as zero.
class PolytopePoint {
 public:
  PolytopePoint() = default;
  // Zero pattern.
  PolytopePoint(int node, int rank);
  // Row-major entries, rows t = i..n top to bottom, each of length i.
  PolytopePoint(int node, int rank, std::vector<int> entries);

  int node() const { return i_; }  // i
  int rank() const { return n_; }  // n
  int row_count() const { return n_ - i_ + 1; }

  // Total accessor: zero outside the grid.
  int at(int s, int t) const {
    if (s < 1 || s > i_ || t < i_ || t > n_) return 0;
    return a_[(t - i_) * i_ + s - 1];
  }
  void add(int s, int t, int delta) { a_[(t - i_) * i_ + s - 1] += delta; }
  const std::vector<int>& entries() const { return a_; }

  friend bool operator==(const PolytopePoint&, const PolytopePoint&) = default;

 private:
  int i_ = 1;
  int n_ = 1;
  std::vector<int> a_;
};

struct StringStats {
  int eps = 0;
  int phi = 0;
  friend bool operator==(const StringStats&, const StringStats&) = default;
};

/// Minimal and maximal maximizers of the corner sums at node l != i.
/// For l > i both are column indices in [i] (p = min, q = max); for l < i
/// both are row indices in {i..n} (p = max, q = min).
struct PivotData {
  int node = 0;
  int p = 0;
  int q = 0;
};

// Tie handling between equal corner sums. `swapped` exchanges the roles of
// p and q; it exists only as a mutation hook for the verification suite.
enum class TieBreak { standard, swapped };

PolytopePoint highest_weight_point(const Params& p);

// Maximum over all monotone paths from (1,i) to (i,n) of the entry sum,
// computed by the O(i (n-i+1)) max-plus recursion.
int max_dyck_sum(const PolytopePoint& a);

// Entries non-negative and max_dyck_sum <= m.
bool is_member(const PolytopePoint& a, const Params& p);

// Every member exactly once, lexicographic in the row-major entry vector.
void for_each_point(const Params& p, const std::function<void(const PolytopePoint&)>& fn);
std::vector<PolytopePoint> enumerate_points(const Params& p);

PivotData pivots(const PolytopePoint& a, int l, TieBreak tb = TieBreak::standard);

// (eps, phi) at node l in {0,...,n}. Values are tie-independent.
StringStats string_stats(const PolytopePoint& a, int l, const Params& p);

// Crystal operator at node l in {0,...,n}; nullopt when annihilated.
std::optional<PolytopePoint> apply(const PolytopePoint& a, Dir dir, int l, const Params& p,
                                   TieBreak tb = TieBreak::standard);

// m omega_i - sum a_{p,q} (e_p - e_{q+1}).
Weight weight(const PolytopePoint& a, const Params& p);

}  // namespace krc::poly
