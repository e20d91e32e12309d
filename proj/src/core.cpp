#include "krc/core.hpp"

#include <numeric>

namespace krc {

Params validate_params(int n, int i, int m) {
  if (n < 1) throw ParamError("n out of range: need n >= 1, got " + std::to_string(n));
  if (i < 1 || i > n)
    throw ParamError("i out of range: need 1 <= i <= " + std::to_string(n) + ", got " +
                     std::to_string(i));
  if (m < 1) throw ParamError("m out of range: need m >= 1, got " + std::to_string(m));
  return Params{n, i, m};
}

int Weight::sum() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Weight operator-(Weight lhs, const Weight& rhs) {
  for (size_t v = 0; v < lhs.coords.size(); ++v) lhs.coords[v] -= rhs.coords[v];
  return lhs;
}

Weight operator+(Weight lhs, const Weight& rhs) {
  for (size_t v = 0; v < lhs.coords.size(); ++v) lhs.coords[v] += rhs.coords[v];
  return lhs;
}

Weight classical_simple_root(int l, int n) {
  Weight w{std::vector<int>(n + 1, 0)};
  if (l == 0) {
    w.coords[n] = 1;
    w.coords[0] = -1;
  } else {
    w.coords[l - 1] = 1;
    w.coords[l] = -1;
  }
  return w;
}

Weight root_span(int p, int q, int n) {
  Weight w{std::vector<int>(n + 1, 0)};
  w.coords[p - 1] += 1;
  w.coords[q] -= 1;
  return w;
}

int coroot_pairing(const Weight& w, int l) {
  const int n = static_cast<int>(w.coords.size()) - 1;
  if (l == 0) return w.coords[n] - w.coords[0];
  return w.coords[l - 1] - w.coords[l];
}

Weight rectangle_weight(const Params& p) {
  Weight w{std::vector<int>(p.n + 1, 0)};
  for (int v = 0; v < p.i; ++v) w.coords[v] = p.m;
  return w;
}

long long hook_content_count(const Params& p) {
  // Product over the (i x m) rectangle of (n+1 + c - r) / hook(r, c).
  unsigned long long num = 1, den = 1;
  for (int r = 1; r <= p.i; ++r) {
    for (int c = 1; c <= p.m; ++c) {
      num *= static_cast<unsigned long long>(p.n + 1 + c - r);
      den *= static_cast<unsigned long long>((p.i - r) + (p.m - c) + 1);
      const unsigned long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  return static_cast<long long>(num / den);
}

}  // namespace krc
