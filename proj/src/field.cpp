#include "unitri/field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unitri {

namespace {

using Poly = std::vector<long long>;  // coefficients mod p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long long mod(long long a, long long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long long inv_mod(long long a, long long p) {
  long long r = 1, b = mod(a, p), k = p - 2;
  while (k > 0) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& f, long long p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const long long lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const long long c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = mod(a[shift + i] - c * f[i], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), f, p);
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by repeated p-th powering.
Poly frobenius_power(const Poly& f, long long p, int k) {
  Poly x = poly_mod(Poly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) {
    Poly r{1};
    Poly base = x;
    long long e = p;
    while (e > 0) {
      if (e & 1) r = poly_mulmod(r, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    x = std::move(r);
  }
  return x;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::vector<int>> conway_polynomial(int p, int e) {
  if (e == 1) return std::vector<int>{0, 1};
  struct Entry {
    int p, e;
    std::vector<int> coeffs;
  };
  static const std::vector<Entry> table = {
      {2, 2, {1, 1, 1}},          {2, 3, {1, 1, 0, 1}},       {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}}, {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 2, {2, 2, 1}},          {3, 3, {1, 2, 0, 1}},       {5, 2, {2, 4, 1}},
      {7, 2, {3, 6, 1}},
  };
  for (const auto& entry : table)
    if (entry.p == p && entry.e == e) return entry.coeffs;
  return std::nullopt;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c = mod(c, p);
  trim(f);
  if (f.size() < 2) return false;
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  if (deg <= 3) {
    // A reducible polynomial of degree 2 or 3 has a linear factor.
    for (long long x = 0; x < p; ++x) {
      long long v = 0;
      for (int i = deg; i >= 0; --i) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // Rabin: x^(p^deg) = x mod f, and gcd(x^(p^(deg/l)) - x, f) = 1 for primes l | deg.
  Poly top = frobenius_power(f, p, deg);
  Poly x = poly_mod(Poly{0, 1}, f, p);
  if (top != x) return false;
  for (int l : prime_factors(deg)) {
    Poly h = frobenius_power(f, p, deg / l);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = mod(h[1] - 1, p);
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field Field::make(int p, int e, std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("field: exponent must be positive");
  unsigned long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= static_cast<unsigned long long>(p);
    if (q > kMaxOrder) throw std::invalid_argument("field: order exceeds supported maximum 65536");
  }
  std::vector<int> f;
  if (modulus) {
    f = *modulus;
    for (auto& c : f) c = static_cast<int>(mod(c, p));
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (static_cast<int>(f.size()) != e + 1)
      throw std::invalid_argument("field: modulus must have degree " + std::to_string(e));
    if (!is_irreducible_mod_p(f, p)) throw std::invalid_argument("field: modulus is reducible over F_p");
    const long long lead_inv = inv_mod(f.back(), p);
    for (auto& c : f) c = static_cast<int>(c * lead_inv % p);
  } else {
    auto known = conway_polynomial(p, e);
    if (!known)
      throw std::invalid_argument("field: no built-in modulus for q = " + std::to_string(q) +
                                  "; supply one");
    f = *known;
    if (!is_irreducible_mod_p(f, p)) throw std::logic_error("field: built-in modulus is reducible");
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = f;

  const Poly fp(f.begin(), f.end());
  auto to_poly = [&](std::uint32_t rep) {
    Poly a(e, 0);
    for (int i = 0; i < e; ++i) {
      a[i] = rep % p;
      rep /= p;
    }
    trim(a);
    return a;
  };
  auto to_rep = [&](const Poly& a) {
    std::uint32_t rep = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) rep = rep * p + static_cast<std::uint32_t>(a[i]);
    return rep;
  };

  // Multiplicative group is cyclic of order q-1: find a generator.
  const std::uint32_t order = d->q - 1;
  std::vector<int> order_primes = prime_factors(static_cast<int>(order));
  auto power_rep = [&](std::uint32_t g, std::uint64_t k) {
    Poly r{1};
    Poly b = to_poly(g);
    while (k > 0) {
      if (k & 1) r = poly_mulmod(r, b, fp, p);
      b = poly_mulmod(b, b, fp, p);
      k >>= 1;
    }
    return to_rep(r);
  };
  std::uint32_t gen = 1;
  if (order > 1) {
    for (std::uint32_t g = 2; g < d->q; ++g) {
      bool ok = true;
      for (int l : order_primes)
        if (power_rep(g, order / l) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = g;
        break;
      }
    }
  }
  d->exp.assign(order, 0);
  d->log.assign(d->q, 0);
  {
    Poly cur{1};
    const Poly g = to_poly(gen);
    for (std::uint32_t k = 0; k < order; ++k) {
      const std::uint32_t rep = to_rep(cur);
      d->exp[k] = rep;
      d->log[rep] = k;
      cur = poly_mulmod(cur, g, fp, p);
    }
  }

  d->neg_table.assign(d->q, 0);
  for (std::uint32_t a = 0; a < d->q; ++a) {
    std::uint32_t rep = a, out = 0, scale = 1;
    for (int i = 0; i < e; ++i) {
      const std::uint32_t c = rep % p;
      rep /= p;
      out += ((p - c) % p) * scale;
      scale *= p;
    }
    d->neg_table[a] = out;
  }

  Field field(d);
  if (p != 2 && e > 1 && d->q <= 1024) {
    d->add_table.assign(static_cast<std::size_t>(d->q) * d->q, 0);
    for (std::uint32_t a = 0; a < d->q; ++a)
      for (std::uint32_t b = 0; b < d->q; ++b) d->add_table[a * d->q + b] = field.add_digits({a}, {b}).rep;
  }

  d->trace.assign(d->q, 0);
  for (std::uint32_t a = 0; a < d->q; ++a) {
    FieldElement x{a}, t{0};
    for (int i = 0; i < e; ++i) {
      t = field.add(t, x);
      x = field.pow(x, p);
    }
    if (t.rep >= static_cast<std::uint32_t>(p)) throw std::logic_error("field: trace left F_p");
    d->trace[a] = static_cast<int>(t.rep);
  }
  return field;
}

Field::Field() {
  static const Field f2 = make(2);
  d_ = f2.d_;
}

Field Field::of_order(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("field: order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw std::invalid_argument("field: " + std::to_string(q) + " is not a prime power");
  return make(static_cast<int>(p), e);
}

FieldElement Field::element(std::uint32_t rep) const {
  if (rep >= d_->q) throw std::invalid_argument("field element " + std::to_string(rep) + " out of range");
  return {rep};
}

FieldElement Field::from_int(long long v) const { return {static_cast<std::uint32_t>(mod(v, d_->p))}; }

FieldElement Field::add_digits(FieldElement a, FieldElement b) const {
  std::uint32_t x = a.rep, y = b.rep, out = 0, scale = 1;
  const std::uint32_t p = static_cast<std::uint32_t>(d_->p);
  for (int i = 0; i < d_->e; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return {out};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.rep == 0) throw std::domain_error("field: inverse of zero");
  const std::uint32_t order = d_->q - 1;
  const std::uint32_t l = d_->log[a.rep];
  return {d_->exp[l == 0 ? 0 : order - l]};
}

FieldElement Field::pow(FieldElement a, long long k) const {
  if (k == 0) return one();
  if (a.rep == 0) {
    if (k < 0) throw std::domain_error("field: negative power of zero");
    return zero();
  }
  const long long order = d_->q - 1;
  long long idx = (static_cast<long long>(d_->log[a.rep]) * mod(k, order)) % order;
  return {d_->exp[idx]};
}

std::vector<FieldElement> Field::prime_basis() const {
  std::vector<FieldElement> out;
  std::uint32_t rep = 1;
  for (int i = 0; i < d_->e; ++i) {
    out.push_back({rep});
    rep *= static_cast<std::uint32_t>(d_->p);
  }
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << d_->q;
  if (d_->e > 1) {
    os << " mod [";
    for (std::size_t i = 0; i < d_->modulus.size(); ++i) os << (i ? "," : "") << d_->modulus[i];
    os << "]";
  }
  return os.str();
}

}  // namespace unitri
