#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitri/field.hpp"

namespace unitri {

using Rational = mpq_class;

// Arithmetic data for Q(zeta_m) = Q[x]/Phi_m.
class CyclotomicRing {
 public:
  int conductor() const { return m_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  // Phi_m, low degree first; monic with integer coefficients.
  const std::vector<long long>& polynomial() const { return phi_; }
  // x^j mod Phi_m for 0 <= j < m.
  const std::vector<long long>& power(int j) const { return powers_[static_cast<std::size_t>(j)]; }

 private:
  friend std::shared_ptr<const CyclotomicRing> cyclo_make(int m);
  int m_ = 1;
  std::vector<long long> phi_;
  std::vector<std::vector<long long>> powers_;
};

// Shared, cached ring descriptor for conductor m >= 1.
std::shared_ptr<const CyclotomicRing> cyclo_make(int m);

// Element of Q(zeta_m) stored as its canonical residue modulo Phi_m.
class CyclotomicNumber {
 public:
  CyclotomicNumber();
  explicit CyclotomicNumber(int m);
  CyclotomicNumber(int m, std::vector<Rational> coeffs);

  static CyclotomicNumber rational(const Rational& r, int m = 1);
  // zeta_m^k.
  static CyclotomicNumber zeta(int m, long long k = 1);
  // sum_k counts[k] zeta_m^k, scaled.
  static CyclotomicNumber from_exponent_counts(int m, std::span<const long long> counts,
                                               const Rational& scale = Rational(1));

  int conductor() const { return ring_->conductor(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Value as a rational; throws if not rational.
  Rational to_rational() const;

  // Same number in Q(zeta_m2), m | m2.
  CyclotomicNumber embed(int m2) const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& r);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& r) { return a *= r; }
  CyclotomicNumber operator-() const;

  // Complex conjugation zeta -> zeta^{-1}.
  CyclotomicNumber conj() const;

  // Exponent k with *this == zeta_m^k, if the number is an m-th root of unity.
  std::optional<int> root_of_unity_exponent() const;

  std::string to_string() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  std::shared_ptr<const CyclotomicRing> ring_;
  std::vector<Rational> coeffs_;
};

// Image under zeta_m -> zeta_m^t. Throws unless gcd(t, m) = 1.
CyclotomicNumber galois_apply(const CyclotomicNumber& a, long long t);

// For m = p^k: whether a lies in Q(zeta_{p^i}), 0 <= i <= k. Tested as
// invariance under every zeta -> zeta^t with t = 1 mod p^i.
bool in_subfield(const CyclotomicNumber& a, int i);

// Prime p and exponent k with m = p^k; nullopt when m is not a prime power (m = 1 gives nullopt).
std::optional<std::pair<int, int>> prime_power_decomposition(int m);

// Additive character theta(x) = zeta_p^{Tr(x)}.
CyclotomicNumber additive_character(const Field& field, FieldElement x);

}  // namespace unitri
