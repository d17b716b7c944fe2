#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "unitri/chain.hpp"
#include "unitri/cyclotomic.hpp"
#include "unitri/duals.hpp"

namespace unitri {

// Exact function on an algebra group, tabulated by element index
// (Algebra::index_of). All values share one conductor.
class ClassFunction {
 public:
  ClassFunction(Algebra group, std::vector<CyclotomicNumber> values);
  static ClassFunction from_function(const Algebra& group, const std::function<CyclotomicNumber(const GroupElement&)>& f,
                                     std::uint64_t cap = kDefaultCap);

  const Algebra& group() const { return group_; }
  int conductor() const { return conductor_; }
  std::uint64_t size() const { return values_.size(); }
  const std::vector<CyclotomicNumber>& values() const { return values_; }
  const CyclotomicNumber& at(std::uint64_t index) const { return values_.at(index); }
  const CyclotomicNumber& operator()(const GroupElement& g) const { return at(group_.index_of(g)); }
  // Value at the identity.
  const CyclotomicNumber& degree() const { return values_.front(); }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  // Pointwise product.
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction scaled(const Rational& r) const;
  // Pointwise image under zeta -> zeta^t.
  ClassFunction galois(long long t) const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  Algebra group_;
  int conductor_ = 1;
  std::vector<CyclotomicNumber> values_;
};

// (scale) * sum over mu in the set of theta_mu(g), theta_mu(g) = theta(mu(g - 1)).
ClassFunction theta_sum(const Algebra& group, const std::vector<Functional>& functionals, const Rational& scale,
                        std::uint64_t cap = kDefaultCap);

ClassFunction theta_lambda(const Functional& lambda, std::uint64_t cap = kDefaultCap);
// |lambda^G|^{-1/2} sum over the coadjoint orbit of theta_mu.
ClassFunction kirillov(const Functional& lambda, std::uint64_t cap = kDefaultCap);
// psi^Exp(Exp X) = psi(1 + X).
ClassFunction exp_kirillov(const Functional& lambda, std::uint64_t cap = kDefaultCap);
// (|G lambda| / |G lambda G|) sum over the two-sided orbit of theta_mu.
ClassFunction supercharacter(const Functional& lambda, std::uint64_t cap = kDefaultCap);

struct XiResult {
  ChainResult chain;
  std::size_t degree_exponent = 0;
  std::size_t norm_exponent = 0;
  std::optional<ClassFunction> table;  // Ind from L_bar of theta_lambda, when tabulated
  bool table_capped = false;           // tabulation requested but |G| exceeded the cap
};

// xi_lambda = Ind_{L_bar}^G theta_lambda. Structural data always; the table when
// requested and |G| is within the cap.
XiResult xi(const Functional& lambda, bool tabulate, std::uint64_t cap = kDefaultCap);

// Xi_lambda = {g lambda s g^{-1} : g in G, s in S_bar}.
std::vector<Functional> xi_orbit_set(const Functional& lambda, const ChainResult& chain, std::uint64_t cap = kDefaultCap);
// (|S_bar| / |G|) sum over Xi_lambda of theta_nu.
ClassFunction xi_from_orbit_sum(const Functional& lambda, std::uint64_t cap = kDefaultCap);

// Conjugacy classes as lists of element indices; class_of[index] gives the class.
struct ConjugacyClasses {
  std::vector<std::vector<std::uint64_t>> classes;
  std::vector<std::size_t> class_of;
};
ConjugacyClasses conjugacy_classes(const Algebra& group, std::uint64_t cap = kDefaultCap);

// Ind_H^G f(g) = (1/|H|) sum over x in G with x g x^{-1} in H of f(x g x^{-1}).
ClassFunction induce(const ClassFunction& f, const Algebra& group, std::uint64_t cap = kDefaultCap);
ClassFunction restrict(const ClassFunction& f, const Algebra& subgroup);

// f o pi for f on the complement subgroup of the projection.
ClassFunction inflate(const ClassFunction& f, const QuotientProjection& pi, std::uint64_t cap = kDefaultCap);

// <f, g> = (1/|G|) sum f(x) conj(g(x)).
CyclotomicNumber inner_product(const ClassFunction& f, const ClassFunction& g);

// Dual of an abelian algebra group via a cyclic decomposition
// A = <x_1> x ... x <x_k> with |x_i| = orders[i].
class AbelianDual {
 public:
  AbelianDual(Algebra group, std::vector<std::uint64_t> generators, std::vector<long long> orders,
              std::vector<std::vector<long long>> exponents);

  const Algebra& group() const { return group_; }
  const std::vector<std::uint64_t>& generators() const { return generators_; }
  const std::vector<long long>& orders() const { return orders_; }
  // Exponent of the group; all characters take values in Q(zeta_exponent).
  long long exponent() const { return exponent_; }
  std::uint64_t size() const { return exponents_.size(); }
  // a with element = prod x_i^{a_i}.
  const std::vector<long long>& exponents_of(std::uint64_t index) const { return exponents_.at(index); }

  // Character chi_c(prod x_i^{a_i}) = prod zeta_{orders_i}^{c_i a_i}.
  ClassFunction character(const std::vector<long long>& label) const;
  // Exponent k with chi_c(element) = zeta_exponent^k.
  long long character_exponent(const std::vector<long long>& label, std::uint64_t index) const;
  // All labels in lexicographic order.
  std::vector<std::vector<long long>> labels() const;

 private:
  Algebra group_;
  std::vector<std::uint64_t> generators_;
  std::vector<long long> orders_;
  long long exponent_ = 1;
  std::vector<std::vector<long long>> exponents_;
};

AbelianDual abelian_dual(const Algebra& group, std::uint64_t cap = kDefaultCap);

// Linear characters of A whose restriction to L is theta_lambda (f on L).
// Throws std::invalid_argument when f is not a homomorphism on L.
std::vector<ClassFunction> constituents_of_induced_linear(const AbelianDual& dual, const Algebra& subgroup,
                                                          const ClassFunction& theta_on_subgroup);

struct LinearityReport {
  bool is_character = false;
  // (g, h) with f(gh) != f(g) f(h), as element indices.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

// Exhaustive homomorphism test f(gh) = f(g) f(h), f(1) = 1, on an abelian group.
LinearityReport is_character_linear(const ClassFunction& f);

struct ValueField {
  int conductor = 1;             // common conductor m of the table
  int min_subfield_index = 0;    // least i with all values in Q(zeta_{p^i})
  std::optional<long long> value_order;  // order of the group of values, when all are roots of unity
};

ValueField field_of_values(const ClassFunction& f);

}  // namespace unitri
