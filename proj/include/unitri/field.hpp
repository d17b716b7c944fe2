#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace unitri {

// An element of F_q, encoded as sum c_i p^i over the power basis of the modulus.
struct FieldElement {
  std::uint32_t rep = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

// Finite field F_q with q = p^e. Immutable; copies share the arithmetic tables.
class Field {
 public:
  // Largest q for which tables are built.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  // F_2.
  Field();

  // Builds F_{p^e}. Without a modulus, e = 1 uses x and e > 1 uses the
  // built-in Conway polynomial (q <= 64). Throws std::invalid_argument on a
  // non-prime p, a reducible modulus or a missing table entry.
  static Field make(int p, int e = 1, std::optional<std::vector<int>> modulus = std::nullopt);

  // Builds F_q from the prime power q with the built-in modulus.
  static Field of_order(std::uint32_t q);

  int p() const { return d_->p; }
  int e() const { return d_->e; }
  std::uint32_t q() const { return d_->q; }
  // Monic modulus, low-degree coefficient first.
  const std::vector<int>& modulus() const { return d_->modulus; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t rep) const;
  // Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(long long v) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    if (d_->p == 2) return {a.rep ^ b.rep};
    if (d_->e == 1) {
      std::uint32_t s = a.rep + b.rep;
      return {s >= d_->q ? s - d_->q : s};
    }
    if (!d_->add_table.empty()) return {d_->add_table[a.rep * d_->q + b.rep]};
    return add_digits(a, b);
  }
  FieldElement neg(FieldElement a) const { return {d_->neg_table[a.rep]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.rep == 0 || b.rep == 0) return {0};
    std::uint32_t s = d_->log[a.rep] + d_->log[b.rep];
    if (s >= d_->q - 1) s -= d_->q - 1;
    return {d_->exp[s]};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, long long k) const;

  // Absolute trace F_q -> F_p, returned as an integer in [0, p).
  int trace(FieldElement a) const { return d_->trace[a.rep]; }
  // A generator of the multiplicative group.
  FieldElement primitive_element() const { return {d_->exp.size() > 1 ? d_->exp[1] : 1}; }
  // 1, x, ..., x^{e-1}: an F_p-basis of F_q.
  std::vector<FieldElement> prime_basis() const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
  }

 private:
  struct Data {
    int p = 2;
    int e = 1;
    std::uint32_t q = 2;
    std::vector<int> modulus;
    std::vector<std::uint32_t> exp;  // exp[k] = g^k, k < q-1
    std::vector<std::uint32_t> log;  // log[exp[k]] = k
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> add_table;  // only for small non-prime q, odd p
    std::vector<int> trace;
  };

  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  FieldElement add_digits(FieldElement a, FieldElement b) const;

  std::shared_ptr<const Data> d_;
};

bool is_prime(long long n);

// Built-in modulus for p^e, if the table has one.
std::optional<std::vector<int>> conway_polynomial(int p, int e);

// Irreducibility of a polynomial over F_p (low-degree-first coefficients).
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace unitri
