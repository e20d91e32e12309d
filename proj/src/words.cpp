#include "krc/words.hpp"

#include <algorithm>
#include <cctype>

namespace krc::words {

namespace {

int first_nonzero_row(const poly::PolytopePoint& a) {
  for (int t = a.node(); t <= a.rank(); ++t)
    for (int s = 1; s <= a.node(); ++s)
      if (a.at(s, t) != 0) return t;
  return 0;
}

poly::PolytopePoint truncate_below(const poly::PolytopePoint& a, int k) {
  poly::PolytopePoint out = a;
  for (int t = a.node(); t < k; ++t)
    for (int s = 1; s <= a.node(); ++s) out.add(s, t, -out.at(s, t));
  return out;
}

}  // namespace

OperatorWord parse_word(std::string_view text, int n) {
  OperatorWord w;
  size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw DecodeError("word syntax error at position " + std::to_string(pos) + ": " + msg);
  };
  auto read_int = [&]() {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return v;
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    Factor f;
    if (text[pos] == 'e')
      f.dir = Dir::E;
    else if (text[pos] == 'f')
      f.dir = Dir::F;
    else
      fail("factor must start with 'e' or 'f'");
    ++pos;
    f.node = read_int();
    if (f.node > n) fail("node index " + std::to_string(f.node) + " exceeds n");
    f.exp = Exponent{ExpKind::literal, 1};
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '{') {
        ++pos;
        ExpKind kind;
        if (text.substr(pos, 3) == "phi")
          kind = ExpKind::phi_minus;
        else if (text.substr(pos, 3) == "eps")
          kind = ExpKind::eps_minus;
        else
          fail("expected 'phi' or 'eps'");
        pos += 3;
        if (kind == ExpKind::phi_minus && f.dir != Dir::F)
          fail("phi-relative exponents attach to f-factors only");
        if (kind == ExpKind::eps_minus && f.dir != Dir::E)
          fail("eps-relative exponents attach to e-factors only");
        const int idx = read_int();
        if (idx != f.node) fail("symbolic exponent index must equal the factor index");
        int a = 0;
        if (pos < text.size() && text[pos] == '-') {
          ++pos;
          a = read_int();
        }
        if (pos >= text.size() || text[pos] != '}') fail("expected '}'");
        ++pos;
        f.exp = Exponent{kind, a};
      } else {
        f.exp = Exponent{ExpKind::literal, read_int()};
      }
    }
    w.factors.push_back(f);
  }
  return w;
}

std::string render_word(const OperatorWord& w) {
  std::string out;
  for (size_t k = 0; k < w.factors.size(); ++k) {
    const Factor& f = w.factors[k];
    if (k) out += ' ';
    out += dir_char(f.dir);
    out += std::to_string(f.node);
    switch (f.exp.kind) {
      case ExpKind::literal:
        if (f.exp.value != 1) out += '^' + std::to_string(f.exp.value);
        break;
      case ExpKind::phi_minus:
      case ExpKind::eps_minus:
        out += "^{";
        out += f.exp.kind == ExpKind::phi_minus ? "phi" : "eps";
        out += std::to_string(f.node);
        if (f.exp.value != 0) out += '-' + std::to_string(f.exp.value);
        out += '}';
        break;
    }
  }
  return out;
}

Element apply_word(const OperatorWord& w, Element cur, const Params& p) {
  const int steps = static_cast<int>(w.factors.size());
  for (int k = 1; k <= steps; ++k) {
    const Factor& f = w.factors[steps - k];
    int count = f.exp.value;
    if (f.exp.kind != ExpKind::literal) {
      const ElementStats st = element_stats(cur, f.node, p);
      const int base = f.exp.kind == ExpKind::phi_minus ? st.phi : st.eps;
      count = base - f.exp.value;
      if (count < 0) throw WordError("word undefined at step " + std::to_string(k));
    }
    for (int rep = 0; rep < count; ++rep) {
      auto next = element_apply(cur, f.dir, f.node, p);
      if (!next) throw WordError("annihilated at step " + std::to_string(k));
      cur = std::move(*next);
    }
  }
  return cur;
}

OperatorWord word_K(const poly::PolytopePoint& q, const Params& p) {
  const int k = first_nonzero_row(q);
  if (k == 0) throw DomainError("no nonzero row");
  int t0 = 0;
  for (int s = 1; s <= p.i; ++s)
    if (q.at(s, k) != 0) {
      t0 = s;
      break;
    }
  OperatorWord w;
  // H: move the assembled row i down to row k.
  for (int l = k; l >= p.i + 1; --l)
    w.factors.push_back({Dir::F, l, {ExpKind::phi_minus, 0}});
  // E: cancel the disturbance the F block left in columns t0+1..i.
  for (int l = p.i; l >= t0 + 1; --l)
    w.factors.push_back({Dir::E, l, {ExpKind::eps_minus, q.at(l, k)}});
  // F: saturate columns i..t0+1, then place the leading entry.
  w.factors.push_back({Dir::F, t0, {ExpKind::literal, q.at(t0, k)}});
  for (int l = t0 + 1; l <= p.i; ++l)
    w.factors.push_back({Dir::F, l, {ExpKind::phi_minus, 0}});
  return w;
}

OperatorWord word_full_path(const poly::PolytopePoint& a, const Params& p) {
  OperatorWord w;
  for (int k = p.i; k <= p.n; ++k) {
    bool row_zero = true;
    for (int s = 1; s <= p.i; ++s) row_zero = row_zero && a.at(s, k) == 0;
    if (row_zero) continue;
    const OperatorWord step = word_K(truncate_below(a, k), p);
    w.factors.insert(w.factors.end(), step.factors.begin(), step.factors.end());
  }
  return w;
}

namespace detail {

OperatorWord word_P_partial(const poly::PolytopePoint& a, const Params& p, int k) {
  OperatorWord w;
  // X_k ... X_n, leftmost X_k; inside X_l the second block applies first.
  for (int l = k; l <= p.n; ++l) {
    int col_total = 0;
    for (int s = 1; s <= p.i; ++s) col_total += a.at(s, l);
    for (int j = l; j >= p.i + 1; --j)
      w.factors.push_back({Dir::F, j, {ExpKind::literal, col_total}});
    for (int j = 2; j <= p.i; ++j) {
      int e = 0;
      for (int s = 2; s <= j; ++s) e += a.at(s, l);
      w.factors.push_back({Dir::F, j, {ExpKind::literal, e}});
    }
  }
  // G: f_1 ... f_i, all with the row-1 total.
  int row1 = 0;
  for (int r = p.i; r <= p.n; ++r) row1 += a.at(1, r);
  for (int j = 1; j <= p.i; ++j) w.factors.push_back({Dir::F, j, {ExpKind::literal, row1}});
  return w;
}

OperatorWord word_P_formula(const poly::PolytopePoint& a, const Params& p) {
  return word_P_partial(a, p, 2);
}

OperatorWord word_Q_partial(const poly::PolytopePoint& a, const Params& p, int k) {
  OperatorWord w;
  // Y_k ... Y_1, leftmost Y_k; inside Y_l the second block applies first.
  for (int l = k; l >= 1; --l) {
    int col_total = 0;
    for (int t = p.i; t <= p.n; ++t) col_total += a.at(l, t);
    for (int j = l; j <= p.i - 1; ++j)
      w.factors.push_back({Dir::F, j, {ExpKind::literal, col_total}});
    for (int j = p.n - 1; j >= p.i; --j) {
      int e = 0;
      for (int t = j; t <= p.n - 1; ++t) e += a.at(l, t);
      w.factors.push_back({Dir::F, j, {ExpKind::literal, e}});
    }
  }
  // H: f_n ... f_i, all with the row-n total.
  int rown = 0;
  for (int s = 1; s <= p.i; ++s) rown += a.at(s, p.n);
  for (int j = p.n; j >= p.i; --j) w.factors.push_back({Dir::F, j, {ExpKind::literal, rown}});
  return w;
}

OperatorWord word_Q_formula(const poly::PolytopePoint& a, const Params& p) {
  return word_Q_partial(a, p, p.n - 1);
}

}  // namespace detail

OperatorWord word_P_small_i(const poly::PolytopePoint& a, const Params& p) {
  if (p.i > 2) throw DomainError("formula restricted to i <= 2");
  return detail::word_P_formula(a, p);
}

OperatorWord word_Q_large_i(const poly::PolytopePoint& a, const Params& p) {
  if (p.i < p.n - 1) throw DomainError("formula restricted to i >= n-1");
  return detail::word_Q_formula(a, p);
}

SigmaChi sigma_chi(const poly::PolytopePoint& a, const Params& p) {
  if (p.i > 2) throw DomainError("recursion defined for i <= 2 only");
  SigmaChi sc;
  sc.n = p.n;
  if (p.n < 2) return sc;
  sc.sigma_.assign(p.n - 1, 0);
  sc.chi_.assign(p.n - 1, 0);
  sc.sigma_[p.n - 2] = -a.at(2, p.n);
  sc.chi_[p.n - 2] = 1;
  for (int k = p.n - 1; k >= 2; --k) {
    sc.sigma_[k - 2] =
        a.at(1, k + 1) + (1 - sc.chi(k + 1)) * sc.sigma(k + 1) - a.at(2, k);
    sc.chi_[k - 2] = sc.sigma(k) < 0 ? 1 : 0;
  }
  // The telescoped identity the recursion encodes; it pins the recursion
  // down, so check it on every construction.
  for (int k = 2; k <= p.n; ++k) {
    int lhs = 0;
    for (int j = k; j <= p.n; ++j) lhs += a.at(1, j) - a.at(2, j);
    int rhs = a.at(1, k) + (1 - sc.chi(k)) * sc.sigma(k);
    for (int j = k; j <= p.n; ++j) rhs += sc.chi(j) * sc.sigma(j);
    if (lhs != rhs) throw DomainError("sigma/chi recursion identity failed");
  }
  return sc;
}

OmegaNu omega_nu(const poly::PolytopePoint& a, const Params& p) {
  if (p.i < p.n - 1) throw DomainError("recursion defined for i >= n-1 only");
  OmegaNu on;
  on.n = p.n;
  if (p.n < 2) return on;
  on.omega_.assign(p.n - 1, 0);
  on.nu_.assign(p.n - 1, 0);
  on.omega_[0] = -a.at(1, p.n - 1);
  on.nu_[0] = 1;
  for (int k = 2; k <= p.n - 1; ++k) {
    on.omega_[k - 1] =
        a.at(k - 1, p.n) + (1 - on.nu(k - 1)) * on.omega(k - 1) - a.at(k, p.n - 1);
    on.nu_[k - 1] = on.omega(k) < 0 ? 1 : 0;
  }
  for (int k = 2; k <= p.n - 1; ++k) {
    int lhs = 0;
    for (int j = 1; j <= k - 1; ++j) lhs += a.at(j, p.n) - a.at(j, p.n - 1);
    int rhs = a.at(k, p.n - 1) + on.omega(k);
    for (int j = 1; j <= k - 1; ++j) rhs += on.nu(j) * on.omega(j);
    if (lhs != rhs) throw DomainError("omega/nu recursion identity failed");
  }
  return on;
}

namespace detail {

tab::MultiplicityMatrix image_small_i_at(const poly::PolytopePoint& a, const Params& p, int k) {
  if (p.i > 2) throw DomainError("explicit image restricted to i <= 2");
  tab::MultiplicityMatrix m;
  m.rows = p.i;
  m.cols = p.n + 2 - p.i;
  m.entries.assign(static_cast<size_t>(m.rows) * m.cols, 0);
  if (p.i == 1) {
    int total = 0;
    for (int j = 1; j <= p.n; ++j) total += a.at(1, j);
    m.at(1, 1) = p.m - total;
    int head = 0;
    for (int j = 1; j <= k - 1; ++j) head += a.at(1, j);
    m.at(1, 2) = head;
    for (int t = k + 1; t <= p.n + 1; ++t) m.at(1, t) = a.at(1, t - 1);
    return m;
  }
  const SigmaChi sc = sigma_chi(a, p);
  auto chi_sigma = [&](int j) { return sc.chi(j) * sc.sigma(j); };
  int row1_total = 0;
  for (int j = 2; j <= p.n; ++j) row1_total += a.at(1, j);
  {
    int head = 0;
    for (int j = 2; j <= k; ++j) head += a.at(1, j);
    m.at(1, 1) = p.m - row1_total;
    m.at(1, 2) = head + (1 - sc.chi(k)) * sc.sigma(k);
  }
  {
    int tail = 0;
    for (int j = k; j <= p.n; ++j) tail += chi_sigma(j);
    m.at(2, 1) = p.m - row1_total + tail;
  }
  if (k >= 3) {
    int head = 0;
    for (int j = 2; j <= k - 1; ++j) head += a.at(1, j);
    m.at(2, 2) = head;
  }
  for (int t = k + 1; t <= p.n; ++t) m.at(1, t) = a.at(2, t - 1) + chi_sigma(t - 1);
  for (int t = std::max(2, k); t <= p.n; ++t) m.at(2, t) = a.at(1, t) - chi_sigma(t);
  return m;
}

tab::MultiplicityMatrix image_large_i_at(const poly::PolytopePoint& a, const Params& p, int k) {
  if (p.i < p.n - 1) throw DomainError("explicit image restricted to i >= n-1");
  tab::MultiplicityMatrix m;
  m.rows = p.i;
  m.cols = p.n + 2 - p.i;
  m.entries.assign(static_cast<size_t>(m.rows) * m.cols, 0);
  if (p.i == p.n) {
    auto bottom = [&](int s) {
      int sum = 0;
      for (int j = 1; j <= s; ++j) sum += a.at(j, p.n);
      return sum;
    };
    for (int s = 1; s <= k && s <= p.n - 1; ++s) {
      m.at(s, 1) = p.m - bottom(s);
      m.at(s, 2) = bottom(s);
    }
    for (int s = k + 1; s <= p.n - 1; ++s) {
      m.at(s, 1) = p.m - bottom(k);
      m.at(s, 2) = bottom(k);
    }
    m.at(p.n, 1) = p.m - bottom(p.n);
    m.at(p.n, 2) = bottom(p.n);
    return m;
  }
  // i = n-1: rows are triples over values s, s+1, s+2.
  const OmegaNu on = omega_nu(a, p);
  auto nu_omega = [&](int j) { return on.nu(j) * on.omega(j); };
  auto nu_omega_sum = [&](int hi) {
    int sum = 0;
    for (int j = 1; j <= hi; ++j) sum += nu_omega(j);
    return sum;
  };
  for (int s = 1; s <= k - 1; ++s) {
    int bottom = 0;
    for (int j = 1; j <= s; ++j) bottom += a.at(j, p.n) - nu_omega(j);
    m.at(s, 1) = p.m - bottom;
    m.at(s, 2) = -nu_omega_sum(s) + (1 - on.nu(s + 1)) * on.omega(s + 1);
    int third = 0;
    for (int j = 2; j <= s + 1; ++j) third += a.at(j, p.n - 1) + nu_omega(j);
    m.at(s, 3) = third;
  }
  for (int s = k; s <= p.i - 1; ++s) {
    int bottom = 0;
    for (int j = 1; j <= k; ++j) bottom += a.at(j, p.n) - nu_omega(j);
    m.at(s, 1) = p.m - bottom;
    m.at(s, 2) = -nu_omega_sum(k) + a.at(k, p.n) + (1 - on.nu(k)) * on.omega(k);
    int third = 0;
    for (int j = 2; j <= k; ++j) third += a.at(j, p.n - 1) + nu_omega(j);
    m.at(s, 3) = third;
  }
  {
    int bottom = 0;
    for (int j = 1; j <= p.i; ++j) bottom += a.at(j, p.n);
    m.at(p.i, 1) = p.m - bottom + nu_omega_sum(k);
    m.at(p.i, 2) = -nu_omega_sum(k);
    m.at(p.i, 3) = bottom;
  }
  return m;
}

}  // namespace detail

tab::Tableau explicit_image_small_i(const poly::PolytopePoint& a, const Params& p) {
  return tab::from_matrix(detail::image_small_i_at(a, p, 2), p);
}

tab::Tableau explicit_image_large_i(const poly::PolytopePoint& a, const Params& p) {
  return tab::from_matrix(detail::image_large_i_at(a, p, std::max(1, p.n - 1)), p);
}

}  // namespace krc::words
