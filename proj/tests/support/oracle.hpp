#pragma once

// Brute-force reference implementations for tests. Everything here works on
// dense integer matrices and enumerates whole groups; nothing calls into the
// library except the small adapters at the bottom.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "unitri/characters.hpp"

namespace oracle {

// F_q as integers sum c_i p^i, multiplied as polynomials modulo a monic modulus.
struct Fq {
  int p = 2, e = 1, q = 2;
  std::vector<int> mod;  // monic, low degree first
  std::vector<int> mul_table, add_table;

  Fq(int p_, int e_, std::vector<int> modulus) : p(p_), e(e_), mod(std::move(modulus)) {
    q = 1;
    for (int k = 0; k < e; ++k) q *= p;
    add_table.assign(static_cast<std::size_t>(q * q), 0);
    mul_table.assign(static_cast<std::size_t>(q * q), 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_table[static_cast<std::size_t>(a * q + b)] = from_digits(add_digits(digits(a), digits(b)));
        mul_table[static_cast<std::size_t>(a * q + b)] = from_digits(mul_poly(digits(a), digits(b)));
      }
  }
  static Fq from(const unitri::Field& f) { return Fq(f.p(), f.e(), f.modulus()); }

  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(e));
    for (int k = 0; k < e; ++k, a /= p) d[static_cast<std::size_t>(k)] = a % p;
    return d;
  }
  int from_digits(const std::vector<int>& d) const {
    int a = 0;
    for (int k = e - 1; k >= 0; --k) a = a * p + d[static_cast<std::size_t>(k)];
    return a;
  }
  std::vector<int> add_digits(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = (a[k] + b[k]) % p;
    return c;
  }
  std::vector<int> mul_poly(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(static_cast<std::size_t>(2 * e), 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        c[static_cast<std::size_t>(i + j)] = (c[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
    for (int d = 2 * e - 1; d >= e; --d) {
      const int lead = c[static_cast<std::size_t>(d)];
      if (!lead) continue;
      for (int k = 0; k <= e; ++k) {
        auto& slot = c[static_cast<std::size_t>(d - e + k)];
        slot = ((slot - lead * mod[static_cast<std::size_t>(k)]) % p + p) % p;
      }
    }
    c.resize(static_cast<std::size_t>(e));
    return c;
  }

  int add(int a, int b) const { return add_table[static_cast<std::size_t>(a * q + b)]; }
  int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a * q + b)]; }
  int neg(int a) const {
    for (int b = 0; b < q; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const {
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1) return b;
    return 0;
  }
  int pow(int a, long long k) const {
    int r = 1;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  // Tr(a) = a + a^p + ... + a^{p^{e-1}}, an element of the prime field.
  int trace(int a) const {
    int t = 0, x = a;
    for (int k = 0; k < e; ++k) {
      t = add(t, x);
      x = pow(x, p);
    }
    return t;
  }
};

// Dense n x n matrix, row-major, 0-based storage with 1-based accessors.
struct Mat {
  int n = 0;
  std::vector<int> a;
  Mat() = default;
  explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_ * n_), 0) {}
  int& at(int i, int j) { return a[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  int at(int i, int j) const { return a[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  friend bool operator==(const Mat&, const Mat&) = default;
  friend bool operator<(const Mat& x, const Mat& y) { return x.a < y.a; }
};

inline Mat identity(int n) {
  Mat m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

inline Mat mul(const Fq& F, const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (int i = 1; i <= x.n; ++i)
    for (int k = 1; k <= x.n; ++k) {
      if (!x.at(i, k)) continue;
      for (int j = 1; j <= x.n; ++j) z.at(i, j) = F.add(z.at(i, j), F.mul(x.at(i, k), y.at(k, j)));
    }
  return z;
}

inline Mat add(const Fq& F, const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] = F.add(x.a[k], y.a[k]);
  return z;
}

inline Mat sub(const Fq& F, const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] = F.sub(x.a[k], y.a[k]);
  return z;
}

// Inverse of a unipotent matrix by back substitution on I = g h.
inline Mat inverse(const Fq& F, const Mat& g) {
  const int n = g.n;
  Mat h = identity(n);
  for (int j = 1; j <= n; ++j)
    for (int i = j - 1; i >= 1; --i) {
      int s = 0;
      for (int k = i + 1; k <= j; ++k) s = F.add(s, F.mul(g.at(i, k), h.at(k, j)));
      h.at(i, j) = F.neg(s);
    }
  return h;
}

using Positions = std::vector<std::pair<int, int>>;

inline Positions full_positions(int n) {
  Positions out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

// All elements 1 + X of the pattern group.
inline std::vector<Mat> group(const Fq& F, int n, const Positions& pos) {
  std::vector<Mat> out;
  std::vector<int> digits(pos.size(), 0);
  while (true) {
    Mat g = identity(n);
    for (std::size_t k = 0; k < pos.size(); ++k) g.at(pos[k].first, pos[k].second) = digits[k];
    out.push_back(g);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == F.q) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

// Functional as coefficients on pattern positions.
using Dual = std::map<std::pair<int, int>, int>;

inline int apply(const Fq& F, const Dual& lam, const Mat& x) {
  int s = 0;
  for (const auto& [ij, c] : lam) s = F.add(s, F.mul(c, x.at(ij.first, ij.second)));
  return s;
}

inline Mat unit(int n, int i, int j) {
  Mat m(n);
  m.at(i, j) = 1;
  return m;
}

// mu(e_ij) for every pattern position, where mu(X) = f(X).
template <class Fn>
Dual tabulate(const Positions& pos, int n, Fn f) {
  Dual out;
  for (const auto& [i, j] : pos) {
    const int v = f(unit(n, i, j));
    if (v) out[{i, j}] = v;
  }
  return out;
}

enum class Action { Left, Right, TwoSided, Coadjoint };

// Orbit by definition: every group element applied once (twice for two-sided).
inline std::set<Dual> orbit(const Fq& F, int n, const Positions& pos, const Dual& lam, Action kind) {
  const auto G = group(F, n, pos);
  std::set<Dual> out;
  auto left = [&](const Mat& gi, const Dual& l) { return tabulate(pos, n, [&](const Mat& x) { return apply(F, l, mul(F, gi, x)); }); };
  auto right = [&](const Mat& gi, const Dual& l) { return tabulate(pos, n, [&](const Mat& x) { return apply(F, l, mul(F, x, gi)); }); };
  for (const auto& g : G) {
    const Mat gi = inverse(F, g);
    switch (kind) {
      case Action::Left: out.insert(left(gi, lam)); break;
      case Action::Right: out.insert(right(gi, lam)); break;
      case Action::Coadjoint:
        out.insert(tabulate(pos, n, [&](const Mat& x) { return apply(F, lam, mul(F, mul(F, g, x), gi)); }));
        break;
      case Action::TwoSided: {
        const Dual gl = left(gi, lam);
        for (const auto& h : G) out.insert(right(inverse(F, h), gl));
        break;
      }
    }
  }
  return out;
}

// Element of Q(zeta_p): coefficients of zeta^0 .. zeta^{p-1}, compared modulo the all-ones vector.
struct Val {
  std::vector<mpq_class> c;
  explicit Val(int p = 2) : c(static_cast<std::size_t>(p)) {}
  int p() const { return static_cast<int>(c.size()); }
  Val normalized() const {
    Val v = *this;
    const mpq_class last = v.c.back();
    for (auto& x : v.c) x -= last;
    return v;
  }
  friend bool operator==(const Val& a, const Val& b) { return a.normalized().c == b.normalized().c; }
  Val& operator+=(const Val& o) {
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  Val scaled(const mpq_class& s) const {
    Val v = *this;
    for (auto& x : v.c) x *= s;
    return v;
  }
  Val operator*(const Val& o) const {
    Val v(p());
    for (int i = 0; i < p(); ++i)
      for (int j = 0; j < p(); ++j) v.c[static_cast<std::size_t>((i + j) % p())] += c[static_cast<std::size_t>(i)] * o.c[static_cast<std::size_t>(j)];
    return v;
  }
  Val conj() const {
    Val v(p());
    for (int i = 0; i < p(); ++i) v.c[static_cast<std::size_t>((p() - i) % p())] = c[static_cast<std::size_t>(i)];
    return v;
  }
  static Val zeta(int p, int k) {
    Val v(p);
    v.c[static_cast<std::size_t>(((k % p) + p) % p)] = 1;
    return v;
  }
  bool is_zero() const { return *this == Val(p()); }
};

using Table = std::vector<Val>;  // indexed like group()

// theta(mu(g - 1)) summed over a set of functionals, times scale.
inline Table theta_sum(const Fq& F, const std::vector<Mat>& G, const std::set<Dual>& funcs, const mpq_class& scale) {
  Table t;
  for (const auto& g : G) {
    const Mat x = sub(F, g, identity(g.n));
    Val v(F.p);
    for (const auto& mu : funcs) v += Val::zeta(F.p, F.trace(apply(F, mu, x)));
    t.push_back(v.scaled(scale));
  }
  return t;
}

inline Val inner(const Table& a, const Table& b) {
  Val s(a.front().p());
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k].conj();
  return s.scaled(mpq_class(1, static_cast<long>(a.size())));
}

// Exact rational value of an element known to be rational (normalized constant term).
inline mpq_class rational_value(const Val& v) {
  const Val n = v.normalized();
  return n.c[0];
}

inline std::size_t index_of(const std::vector<Mat>& G, const Mat& g) {
  return static_cast<std::size_t>(std::find(G.begin(), G.end(), g) - G.begin());
}

// Induction by the defining formula over all x in G.
inline Table induce(const Fq& F, const std::vector<Mat>& G, const std::vector<Mat>& H, const Table& f) {
  (void)F;
  Table out;
  for (const auto& g : G) {
    Val s(f.front().p());
    for (const auto& x : G) {
      const Mat c = mul(F, mul(F, x, g), inverse(F, x));
      const std::size_t k = index_of(H, c);
      if (k < H.size()) s += f[k];
    }
    out.push_back(s.scaled(mpq_class(1, static_cast<long>(H.size()))));
  }
  return out;
}

// Number of conjugacy classes by direct orbit computation.
inline std::size_t class_count(const Fq& F, const std::vector<Mat>& G) {
  std::set<Mat> seen;
  std::size_t classes = 0;
  for (const auto& g : G) {
    if (seen.count(g)) continue;
    ++classes;
    for (const auto& x : G) seen.insert(mul(F, mul(F, x, g), inverse(F, x)));
  }
  return classes;
}

// Row-reduced basis of the span of vectors of length m over F.
inline std::vector<std::vector<int>> echelon(const Fq& F, std::vector<std::vector<int>> rows, std::size_t m) {
  std::vector<std::vector<int>> out;
  for (std::size_t c = 0; c < m; ++c) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r[c] != 0; });
    if (it == rows.end()) continue;
    std::vector<int> piv = *it;
    rows.erase(it);
    const int s = F.inv(piv[c]);
    for (auto& x : piv) x = F.mul(x, s);
    auto clear = [&](std::vector<int>& r) {
      const int f = r[c];
      if (!f) return;
      for (std::size_t k = 0; k < m; ++k) r[k] = F.sub(r[k], F.mul(f, piv[k]));
    };
    for (auto& r : rows) clear(r);
    for (auto& r : out) clear(r);
    out.push_back(piv);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const auto pa = std::find_if(a.begin(), a.end(), [](int x) { return x != 0; }) - a.begin();
    const auto pb = std::find_if(b.begin(), b.end(), [](int x) { return x != 0; }) - b.begin();
    return pa < pb;
  });
  return out;
}

// {sum c_a S_a : sum_a c_a B(S_a, T_b) = 0 for all b}, by elimination on the Gram matrix.
inline std::vector<std::vector<int>> left_kernel(const Fq& F, int n, const Positions& pos, const Dual& lam,
                                                 const std::vector<std::vector<int>>& S,
                                                 const std::vector<std::vector<int>>& T) {
  const std::size_t m = pos.size();
  auto to_mat = [&](const std::vector<int>& v) {
    Mat x(n);
    for (std::size_t k = 0; k < m; ++k) x.at(pos[k].first, pos[k].second) = v[k];
    return x;
  };
  std::vector<Mat> Sm, Tm;
  for (const auto& s : S) Sm.push_back(to_mat(s));
  for (const auto& t : T) Tm.push_back(to_mat(t));
  // Augmented rows [gram column | identity] reduced to find combinations with zero Gram part.
  const std::size_t k = S.size(), w = T.size();
  std::vector<std::vector<int>> rows;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<int> r(w + k, 0);
    for (std::size_t b = 0; b < w; ++b) r[b] = apply(F, lam, mul(F, Sm[a], Tm[b]));
    r[w + a] = 1;
    rows.push_back(r);
  }
  const auto red = echelon(F, rows, w + k);
  std::vector<std::vector<int>> out;
  for (const auto& r : red) {
    if (std::any_of(r.begin(), r.begin() + static_cast<long>(w), [](int x) { return x != 0; })) continue;
    std::vector<int> v(m, 0);
    for (std::size_t a = 0; a < k; ++a)
      if (r[w + a])
        for (std::size_t c = 0; c < m; ++c) v[c] = F.add(v[c], F.mul(r[w + a], S[a][c]));
    out.push_back(v);
  }
  return echelon(F, out, m);
}

struct Chain {
  std::vector<std::vector<std::vector<int>>> l, s;  // echelon bases
};

// The alternating chain run until s stabilises.
inline Chain chain(const Fq& F, int n, const Positions& pos, const Dual& lam) {
  const std::size_t m = pos.size();
  std::vector<std::vector<int>> whole;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<int> v(m, 0);
    v[k] = 1;
    whole.push_back(v);
  }
  Chain c;
  c.l.push_back({});
  c.s.push_back(whole);
  while (true) {
    const auto& s = c.s.back();
    auto l = left_kernel(F, n, pos, lam, s, s);
    auto s2 = left_kernel(F, n, pos, lam, s, l);
    const bool stable = s2 == s;
    c.l.push_back(std::move(l));
    c.s.push_back(std::move(s2));
    if (stable) break;
  }
  return c;
}

// Positions on which every vector of the span vanishes.
inline std::set<std::pair<int, int>> zero_positions(const Positions& pos, const std::vector<std::vector<int>>& basis) {
  std::set<std::pair<int, int>> out;
  for (std::size_t k = 0; k < pos.size(); ++k)
    if (std::all_of(basis.begin(), basis.end(), [&](const auto& v) { return v[k] == 0; })) out.insert(pos[k]);
  return out;
}

// ---- adapters to the library ----

inline unitri::GroupElement to_group_element(const unitri::Field& field, const Mat& g) {
  unitri::NilMatrix x(field, g.n);
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (g.at(i, j)) x.set(i, j, field.element(static_cast<std::uint32_t>(g.at(i, j))));
  return {x};
}

inline Mat from_group_element(const unitri::GroupElement& g) {
  Mat m = identity(g.n());
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j) m.at(i, j) = static_cast<int>(g.body(i, j).rep);
  return m;
}

inline Dual from_functional(const unitri::Functional& f) {
  Dual d;
  for (const auto& e : f.entries())
    if (e.value.rep) d[{e.pos.i, e.pos.j}] = static_cast<int>(e.value.rep);
  return d;
}

inline unitri::Functional to_functional(const unitri::Algebra& alg, const Dual& d) {
  std::vector<unitri::Entry> entries;
  for (const auto& [ij, c] : d) entries.push_back({{ij.first, ij.second}, alg.field().element(static_cast<std::uint32_t>(c))});
  return unitri::Functional::from_entries(alg, entries);
}

inline unitri::CyclotomicNumber to_cyclotomic(const Val& v) {
  unitri::CyclotomicNumber out = unitri::CyclotomicNumber::rational(0, v.p());
  for (int k = 0; k < v.p(); ++k)
    if (v.c[static_cast<std::size_t>(k)] != 0) out += unitri::CyclotomicNumber::zeta(v.p(), k) * v.c[static_cast<std::size_t>(k)];
  return out;
}

// Whether a library table equals an oracle table on every element of G.
inline bool same_table(const unitri::ClassFunction& f, const std::vector<Mat>& G, const Table& t) {
  const unitri::Field& field = f.group().field();
  for (std::size_t k = 0; k < G.size(); ++k)
    if (!(f(to_group_element(field, G[k])) == to_cyclotomic(t[k]))) return false;
  return true;
}

inline unitri::Algebra pattern_algebra(const unitri::Field& field, int n, const Positions& pos) {
  std::vector<unitri::Position> ps;
  for (const auto& [i, j] : pos) ps.push_back({i, j});
  return unitri::Algebra::pattern(unitri::Pattern(n, ps), field);
}

inline Positions positions_of(const unitri::Algebra& alg) {
  Positions out;
  for (const auto& p : alg.pattern()->positions()) out.push_back({p.i, p.j});
  return out;
}

// Random closed pattern: closure of a random subset of positions.
inline Positions random_closed_pattern(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::set<std::pair<int, int>> s;
  for (const auto& ij : full_positions(n))
    if (coin(rng)) s.insert(ij);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [i, j] : std::vector<std::pair<int, int>>(s.begin(), s.end()))
      for (const auto& [j2, k] : std::vector<std::pair<int, int>>(s.begin(), s.end()))
        if (j == j2 && s.insert({i, k}).second) grew = true;
  }
  return Positions(s.begin(), s.end());
}

// Random quasi-monomial functional supported on the pattern.
inline Dual random_quasi_monomial(std::mt19937_64& rng, const Fq& F, const Positions& pos) {
  Positions shuffled = pos;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::uniform_int_distribution<int> value(1, F.q - 1);
  std::bernoulli_distribution coin(0.6);
  std::set<int> rows, cols;
  Dual d;
  for (const auto& [i, j] : shuffled) {
    if (rows.count(i) || cols.count(j) || !coin(rng)) continue;
    rows.insert(i);
    cols.insert(j);
    d[{i, j}] = value(rng);
  }
  return d;
}

}  // namespace oracle
