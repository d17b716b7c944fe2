#include "unitri/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unitri {

namespace {

using IntPoly = std::vector<long long>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly quot(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const long long c = a[k];
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic: inexact polynomial division");
  return quot;
}

IntPoly cyclotomic_polynomial(int m) {
  IntPoly num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) num = divide_monic(num, cyclo_make(d)->polynomial());
  return num;
}

void reduce_into(std::vector<Rational>& out, const IntPoly& red, const Rational& c) {
  for (std::size_t i = 0; i < red.size(); ++i)
    if (red[i] != 0) out[i] += c * static_cast<long>(red[i]);
}

long long floor_mod(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

std::shared_ptr<const CyclotomicRing> cyclo_make(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic: conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicRing>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto ring = std::shared_ptr<CyclotomicRing>(new CyclotomicRing());
  ring->m_ = m;
  ring->phi_ = cyclotomic_polynomial(m);
  const std::size_t deg = ring->phi_.size() - 1;
  ring->powers_.resize(static_cast<std::size_t>(m));
  IntPoly cur(deg, 0);
  cur[0] = 1;
  if (deg == 0) cur.clear();
  for (int j = 0; j < m; ++j) {
    ring->powers_[static_cast<std::size_t>(j)] = cur;
    // cur <- x * cur mod Phi_m
    IntPoly next(deg, 0);
    const long long top = deg ? cur[deg - 1] : 0;
    for (std::size_t i = deg; i-- > 1;) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < deg; ++i) next[i] -= top * ring->phi_[i];
    cur = std::move(next);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(m, std::move(ring));
  return it->second;
}

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1) {}

CyclotomicNumber::CyclotomicNumber(int m) : ring_(cyclo_make(m)), coeffs_(static_cast<std::size_t>(ring_->degree())) {}

CyclotomicNumber::CyclotomicNumber(int m, std::vector<Rational> coeffs) : ring_(cyclo_make(m)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring_->degree())
    throw std::invalid_argument("cyclotomic: coefficient list has wrong length");
}

CyclotomicNumber CyclotomicNumber::rational(const Rational& r, int m) {
  CyclotomicNumber out(m);
  out.coeffs_[0] = r;
  return out;
}

CyclotomicNumber CyclotomicNumber::zeta(int m, long long k) {
  CyclotomicNumber out(m);
  reduce_into(out.coeffs_, out.ring_->power(static_cast<int>(floor_mod(k, m))), Rational(1));
  return out;
}

CyclotomicNumber CyclotomicNumber::from_exponent_counts(int m, std::span<const long long> counts, const Rational& scale) {
  CyclotomicNumber out(m);
  const int deg = out.ring_->degree();
  std::vector<long long> acc(static_cast<std::size_t>(deg), 0);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0) continue;
    const auto& red = out.ring_->power(static_cast<int>(k % static_cast<std::size_t>(m)));
    for (int i = 0; i < deg; ++i) acc[static_cast<std::size_t>(i)] += counts[k] * red[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < deg; ++i) out.coeffs_[static_cast<std::size_t>(i)] = scale * static_cast<long>(acc[static_cast<std::size_t>(i)]);
  return out;
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic: value is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::embed(int m2) const {
  const int m = conductor();
  if (m2 == m) return *this;
  if (m2 % m != 0) throw std::invalid_argument("cyclotomic: cannot embed into a non-multiple conductor");
  CyclotomicNumber out(m2);
  const int step = m2 / m;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) reduce_into(out.coeffs_, out.ring_->power(static_cast<int>(k) * step % m2), coeffs_[k]);
  return out;
}

namespace {

void unify(CyclotomicNumber& a, CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) return;
  const int m = std::lcm(a.conductor(), b.conductor());
  a = a.embed(m);
  b = b.embed(m);
}

}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  if (o.conductor() != conductor()) {
    CyclotomicNumber b = o;
    unify(*this, b);
    return *this += b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  if (o.conductor() != conductor()) {
    CyclotomicNumber b = o;
    unify(*this, b);
    return *this -= b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (o.conductor() != conductor()) {
    CyclotomicNumber b = o;
    unify(*this, b);
    return *this *= b;
  }
  const int m = conductor();
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      reduce_into(out, ring_->power(static_cast<int>((i + j) % static_cast<std::size_t>(m))), coeffs_[i] * o.coeffs_[j]);
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::conj() const { return galois_apply(*this, -1); }

std::optional<int> CyclotomicNumber::root_of_unity_exponent() const {
  const int m = conductor();
  for (int k = 0; k < m; ++k) {
    const auto& red = ring_->power(k);
    bool eq = true;
    for (std::size_t i = 0; i < coeffs_.size() && eq; ++i) eq = coeffs_[i] == static_cast<long>(red[i]);
    if (eq) return k;
  }
  return std::nullopt;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i > 0) os << "*z" << conductor() << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  CyclotomicNumber x = a, y = b;
  unify(x, y);
  return x.coeffs_ == y.coeffs_;
}

CyclotomicNumber galois_apply(const CyclotomicNumber& a, long long t) {
  const int m = a.conductor();
  if (std::gcd(floor_mod(t, m), static_cast<long long>(m)) != 1)
    throw std::invalid_argument("galois: exponent " + std::to_string(t) + " not coprime to " + std::to_string(m));
  auto ring = cyclo_make(m);
  CyclotomicNumber out(m);
  std::vector<Rational> acc(a.coefficients().size());
  for (std::size_t k = 0; k < a.coefficients().size(); ++k) {
    const Rational& c = a.coefficients()[k];
    if (c == 0) continue;
    reduce_into(acc, ring->power(static_cast<int>(floor_mod(static_cast<long long>(k) * t, m))), c);
  }
  return CyclotomicNumber(m, std::move(acc));
}

std::optional<std::pair<int, int>> prime_power_decomposition(int m) {
  if (m < 2) return std::nullopt;
  int p = 2;
  while (m % p != 0) ++p;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, k);
}

bool in_subfield(const CyclotomicNumber& a, int i) {
  const int m = a.conductor();
  if (m == 1) return true;
  auto pk = prime_power_decomposition(m);
  if (!pk) throw std::invalid_argument("in_subfield: conductor " + std::to_string(m) + " is not a prime power");
  const auto [p, k] = *pk;
  if (i < 0) throw std::invalid_argument("in_subfield: negative index");
  if (i >= k) return true;
  long long pi = 1;
  for (int s = 0; s < i; ++s) pi *= p;
  for (long long t = 1; t < m; t += pi) {
    if (t % p == 0) continue;
    if (!(galois_apply(a, t) == a)) return false;
  }
  return true;
}

CyclotomicNumber additive_character(const Field& field, FieldElement x) {
  return CyclotomicNumber::zeta(field.p(), field.trace(x));
}

}  // namespace unitri
