#include "krc/path_stats.hpp"

#include <algorithm>

namespace krc::stats {

int step_path_sum(const poly::PolytopePoint& a, int s, int r) {
  const int i = a.node(), n = a.rank();
  if (s < 1 || s >= i || r < i || r > n)
    throw DomainError("step path needs 1 <= s < i <= r <= n");
  int sum = 0;
  for (int t = i; t <= r; ++t) sum += a.at(s, t);
  for (int t = r; t <= n; ++t) sum += a.at(s + 1, t);
  return sum;
}

StatBundle stat_bundle(const poly::PolytopePoint& a, int s) {
  const int i = a.node(), n = a.rank();
  if (s < 1 || s >= i) throw DomainError("column must satisfy 1 <= s < i");
  StatBundle b;
  b.column = s;
  b.row_start = i;
  b.path_sums.resize(n - i + 1);
  // One pass: S(r) = prefix of column s down to r, plus suffix of column
  // s+1 from r down.
  {
    std::vector<int> suffix(n - i + 2, 0);
    for (int r = n; r >= i; --r) suffix[r - i] = suffix[r - i + 1] + a.at(s + 1, r);
    int prefix = 0;
    for (int r = i; r <= n; ++r) {
      prefix += a.at(s, r);
      b.path_sums[r - i] = prefix + suffix[r - i];
    }
  }
  b.max_sum = *std::max_element(b.path_sums.begin(), b.path_sums.end());

  // Records: each next one is the LAST maximizer of S beyond the previous.
  b.records.push_back(i - 1);
  int from = i;
  while (b.records.back() != n) {
    int best = b.path_sum(from), arg = from;
    for (int r = from; r <= n; ++r)
      if (b.path_sum(r) >= best) {
        best = b.path_sum(r);
        arg = r;
      }
    b.records.push_back(arg);
    from = arg + 1;
  }

  // x vanishes off the records; on them it telescopes between consecutive
  // path sums, with x(n) = a_{s+1,n}.
  b.increments.assign(n - i + 1, 0);
  const int ell = b.ell();
  for (int k = 1; k <= ell - 1; ++k)
    b.increments[b.records[k] - i] = b.path_sum(b.records[k]) - b.path_sum(b.records[k + 1]);
  b.increments[n - i] = a.at(s + 1, n);
  return b;
}

poly::PolytopePoint saturate(const poly::PolytopePoint& a, int s, const Params& p,
                             std::vector<int>* pivot_rows) {
  const StatBundle b = stat_bundle(a, s);

  poly::PolytopePoint closed = a;
  for (int r = p.i; r <= p.n; ++r) {
    const int x = b.increment(r);
    if (x == 0) continue;
    closed.add(s, r, x);
    closed.add(s + 1, r, -x);
  }

  poly::PolytopePoint iterated = a;
  const int phi = poly::string_stats(a, s, p).phi;
  for (int k = 0; k < phi; ++k) {
    if (pivot_rows) pivot_rows->push_back(poly::pivots(iterated, s).p);
    auto next = poly::apply(iterated, Dir::F, s, p);
    if (!next) throw DomainError("lowering operator annihilated before phi was exhausted");
    iterated = std::move(*next);
  }

  if (!(closed == iterated))
    throw DomainError("saturate: closed form and operator iteration disagree");
  return iterated;
}

}  // namespace krc::stats
