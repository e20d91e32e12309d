#include "krc/polytope.hpp"

#include <algorithm>

namespace krc::poly {

PolytopePoint::PolytopePoint(int node, int rank)
    : i_(node), n_(rank), a_(static_cast<size_t>(rank - node + 1) * node, 0) {}

PolytopePoint::PolytopePoint(int node, int rank, std::vector<int> entries)
    : i_(node), n_(rank), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != (n_ - i_ + 1) * i_)
    throw DomainError("pattern entry count does not match shape");
}

PolytopePoint highest_weight_point(const Params& p) { return PolytopePoint(p.i, p.n); }

int max_dyck_sum(const PolytopePoint& a) {
  const int i = a.node(), n = a.rank();
  // M(s,t) = a(s,t) + max(M(s,t+1), M(s+1,t)), answer at (1,i).
  std::vector<int> best(static_cast<size_t>(n - i + 1) * i, 0);
  auto cell = [&](int s, int t) -> int& { return best[(t - i) * i + s - 1]; };
  for (int t = n; t >= i; --t)
    for (int s = i; s >= 1; --s) {
      int down = t < n ? cell(s, t + 1) : 0;
      int right = s < i ? cell(s + 1, t) : 0;
      cell(s, t) = a.at(s, t) + std::max(down, right);
    }
  return cell(1, i);
}

bool is_member(const PolytopePoint& a, const Params& p) {
  if (a.node() != p.i || a.rank() != p.n) return false;
  for (int v : a.entries())
    if (v < 0) return false;
  return max_dyck_sum(a) <= p.m;
}

namespace {

// Backtracking in row-major order. prefix(s,t) is the best path sum from
// (1,i) through (s,t) over the entries fixed so far; the next entry is
// bounded by the residual m - prefix, which is exact because every later
// position on any path through the cell is still zero.
struct Enumerator {
  const Params& p;
  const std::function<void(const PolytopePoint&)>& fn;
  PolytopePoint a;
  std::vector<int> prefix;

  Enumerator(const Params& p_, const std::function<void(const PolytopePoint&)>& fn_)
      : p(p_), fn(fn_), a(p_.i, p_.n),
        prefix(static_cast<size_t>(p_.n - p_.i + 1) * p_.i, 0) {}

  int& pref(int s, int t) { return prefix[(t - p.i) * p.i + s - 1]; }

  void run(int s, int t) {
    if (t > p.n) {
      fn(a);
      return;
    }
    const int ns = s == p.i ? 1 : s + 1;
    const int nt = s == p.i ? t + 1 : t;
    int in = 0;
    if (t > p.i) in = std::max(in, pref(s, t - 1));
    if (s > 1) in = std::max(in, pref(s - 1, t));
    for (int v = 0; v + in <= p.m; ++v) {
      a.add(s, t, v - a.at(s, t));
      pref(s, t) = in + v;
      run(ns, nt);
    }
    a.add(s, t, -a.at(s, t));
  }
};

}  // namespace

void for_each_point(const Params& p, const std::function<void(const PolytopePoint&)>& fn) {
  Enumerator e(p, fn);
  e.run(1, p.i);
}

std::vector<PolytopePoint> enumerate_points(const Params& p) {
  std::vector<PolytopePoint> out;
  for_each_point(p, [&](const PolytopePoint& a) { out.push_back(a); });
  return out;
}

PivotData pivots(const PolytopePoint& a, int l, TieBreak tb) {
  const int i = a.node(), n = a.rank();
  if (l == a.node() || l < 1 || l > n) throw DomainError("pivot node must lie in [n] and differ from i");
  PivotData pd;
  pd.node = l;
  if (l > i) {
    // Corner sums over columns p in [i] of rows l-1 and l.
    int best = 0, lo = 0, hi = 0;
    int head = 0;  // sum_{j<=p} a(j, l-1)
    int tail = 0;  // sum_{j>=p} a(j, l)
    for (int j = 1; j <= i; ++j) tail += a.at(j, l);
    for (int p = 1; p <= i; ++p) {
      head += a.at(p, l - 1);
      const int corner = head + tail;
      tail -= a.at(p, l);
      if (p == 1 || corner > best) {
        best = corner;
        lo = hi = p;
      } else if (corner == best) {
        hi = p;
      }
    }
    pd.p = tb == TieBreak::standard ? lo : hi;  // min maximizer
    pd.q = tb == TieBreak::standard ? hi : lo;  // max maximizer
  } else {
    // Corner sums over rows p in {i..n} of columns l and l+1.
    int best = 0, lo = 0, hi = 0;
    int head = 0;  // sum_{j<=p} a(l, j)
    int tail = 0;  // sum_{j>=p} a(l+1, j)
    for (int j = i; j <= n; ++j) tail += a.at(l + 1, j);
    for (int p = i; p <= n; ++p) {
      head += a.at(l, p);
      const int corner = head + tail;
      tail -= a.at(l + 1, p);
      if (p == i || corner > best) {
        best = corner;
        lo = hi = p;
      } else if (corner == best) {
        hi = p;
      }
    }
    pd.p = tb == TieBreak::standard ? hi : lo;  // max maximizer
    pd.q = tb == TieBreak::standard ? lo : hi;  // min maximizer
  }
  return pd;
}

StringStats string_stats(const PolytopePoint& a, int l, const Params& p) {
  const int i = p.i, n = p.n;
  StringStats st;
  if (l == 0) {
    st.phi = a.at(1, n);
    int used = 0;
    for (int j = i; j <= n; ++j) used += a.at(1, j);
    for (int j = 2; j <= i; ++j) used += a.at(j, n);
    st.eps = p.m - used;
    return st;
  }
  if (l == i) {
    int used = 0;
    for (int j = 1; j < i; ++j) used += a.at(j, i);
    for (int j = i; j <= n; ++j) used += a.at(i, j);
    st.phi = p.m - used;
    st.eps = a.at(i, i);
    return st;
  }
  const PivotData pd = pivots(a, l);
  if (l > i) {
    for (int j = 1; j <= pd.p; ++j) st.phi += a.at(j, l - 1);
    for (int j = 1; j <= pd.p - 1; ++j) st.phi -= a.at(j, l);
    for (int j = pd.q; j <= i; ++j) st.eps += a.at(j, l);
    for (int j = pd.q + 1; j <= i; ++j) st.eps -= a.at(j, l - 1);
  } else {
    for (int j = pd.p; j <= n; ++j) st.phi += a.at(l + 1, j);
    for (int j = pd.p + 1; j <= n; ++j) st.phi -= a.at(l, j);
    for (int j = i; j <= pd.q; ++j) st.eps += a.at(l, j);
    for (int j = i; j <= pd.q - 1; ++j) st.eps -= a.at(l + 1, j);
  }
  return st;
}

std::optional<PolytopePoint> apply(const PolytopePoint& a, Dir dir, int l, const Params& p,
                                   TieBreak tb) {
  const StringStats st = string_stats(a, l, p);
  if (dir == Dir::F && st.phi == 0) return std::nullopt;
  if (dir == Dir::E && st.eps == 0) return std::nullopt;
  PolytopePoint out = a;
  if (l == 0) {
    out.add(1, p.n, dir == Dir::F ? -1 : 1);
    return out;
  }
  if (l == p.i) {
    out.add(p.i, p.i, dir == Dir::F ? 1 : -1);
    return out;
  }
  const PivotData pd = pivots(a, l, tb);
  if (l > p.i) {
    if (dir == Dir::F) {
      out.add(pd.p, l - 1, -1);
      out.add(pd.p, l, 1);
    } else {
      out.add(pd.q, l - 1, 1);
      out.add(pd.q, l, -1);
    }
  } else {
    if (dir == Dir::F) {
      out.add(l, pd.p, 1);
      out.add(l + 1, pd.p, -1);
    } else {
      out.add(l, pd.q, -1);
      out.add(l + 1, pd.q, 1);
    }
  }
  return out;
}

Weight weight(const PolytopePoint& a, const Params& p) {
  Weight w = rectangle_weight(p);
  for (int s = 1; s <= p.i; ++s)
    for (int t = p.i; t <= p.n; ++t) {
      const int v = a.at(s, t);
      if (v == 0) continue;
      w.coords[s - 1] -= v;
      w.coords[t + 1 - 1] += v;
    }
  return w;
}

}  // namespace krc::poly
