#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unitri/algebra.hpp"

namespace unitri {

struct Entry {
  Position pos;
  FieldElement value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Linear functional on an algebra, stored by its values on the echelon basis.
// For a pattern algebra these are the coefficients lambda_ij on the pattern.
class Functional {
 public:
  static Functional zero(const Algebra& algebra);
  // Restriction to the algebra of sum c e*_{ij} over the given entries. Repeated
  // positions add up.
  static Functional from_entries(const Algebra& algebra, const std::vector<Entry>& entries);
  static Functional from_values(const Algebra& algebra, Vector values);

  const Algebra& algebra() const { return algebra_; }
  const Vector& values() const { return values_; }

  FieldElement operator()(const NilMatrix& x) const;
  // Value at an element given by its coordinates in the echelon basis.
  FieldElement evaluate(const Vector& coords) const;

  // Canonical representative sum lambda_ij e*_{ij}, supported on pivot positions.
  std::vector<Entry> entries() const;
  // Coefficient at a pivot position; zero elsewhere.
  FieldElement entry(int i, int j) const;
  // Dense n x n matrix (row-major) of the canonical representative.
  std::vector<FieldElement> ambient_matrix() const;

  Functional operator+(const Functional& o) const;
  Functional operator-(const Functional& o) const;
  Functional scaled(FieldElement c) const;
  bool is_zero() const;

  friend bool operator==(const Functional& a, const Functional& b) { return a.values_ == b.values_; }
  friend bool operator<(const Functional& a, const Functional& b) { return a.values_ < b.values_; }

 private:
  Functional(Algebra algebra, Vector values) : algebra_(std::move(algebra)), values_(std::move(values)) {}
  Algebra algebra_;
  Vector values_;
};

struct FunctionalHash {
  std::size_t operator()(const Functional& f) const;
};

// B_lambda(X, Y) = lambda(XY).
FieldElement bilinear(const Functional& lambda, const NilMatrix& x, const NilMatrix& y);

// g.lambda (X) = lambda(g^{-1} X).
Functional act_left(const GroupElement& g, const Functional& lambda);
// lambda.g (X) = lambda(X g^{-1}).
Functional act_right(const Functional& lambda, const GroupElement& g);
// lambda^g (X) = lambda(g X g^{-1}).
Functional act_coadjoint(const Functional& lambda, const GroupElement& g);

enum class OrbitKind { Left, Right, TwoSided, Coadjoint };
OrbitKind parse_orbit_kind(const std::string& s);
std::string to_string(OrbitKind kind);

// Orbit by breadth-first search over the algebra's generators, sorted.
// Throws CapExceeded when the orbit grows beyond cap.
std::vector<Functional> orbit(const Functional& lambda, OrbitKind kind, std::uint64_t cap = kDefaultCap);
// Orbit under the subgroup 1 + a of the algebra group of lambda.
std::vector<Functional> orbit_under(const Functional& lambda, OrbitKind kind, const Algebra& acting,
                                    std::uint64_t cap = kDefaultCap);

// |G lambda intersect lambda G|.
std::uint64_t left_right_intersection_size(const Functional& lambda, std::uint64_t cap = kDefaultCap);

// Set partition of {1..n} with parts sorted by least element.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> parts;

  std::size_t size() const { return parts.size(); }
  std::string to_string() const;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

// At most one nonzero entry in each row and each column. Requires a pattern algebra.
bool is_quasi_monomial(const Functional& lambda);
// Connected components of the arc graph {i -- j : lambda_ij != 0}. Requires a
// quasi-monomial functional.
SetPartition shape(const Functional& lambda);

// nu_ij = (D_ii / D_jj) lambda_ij for the diagonal matrix D. Requires a pattern algebra.
Functional torus_act(const std::vector<FieldElement>& diagonal, const Functional& lambda);

// All quasi-monomial functionals of a pattern algebra.
std::vector<Functional> quasi_monomial_functionals(const Algebra& algebra, std::uint64_t cap = kDefaultCap);

}  // namespace unitri
