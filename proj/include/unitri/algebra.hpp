#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitri/errors.hpp"
#include "unitri/field.hpp"
#include "unitri/linalg.hpp"

namespace unitri {

// 1-based matrix position (i, j) with i < j. Ordering is row-major.
struct Position {
  int i = 1;
  int j = 2;

  friend auto operator<=>(const Position&, const Position&) = default;
};

// Number of strictly upper triangular positions of an n x n matrix.
std::size_t triangle_size(int n);
// Row-major coordinate of a position among all positions of u_n.
std::size_t coordinate_of(int n, Position pos);
Position position_of(int n, std::size_t coord);
std::string to_string(Position pos);

// A set of positions above the diagonal.
class Pattern {
 public:
  Pattern(int n, std::vector<Position> positions);
  static Pattern full(int n);

  int n() const { return n_; }
  const std::vector<Position>& positions() const { return positions_; }
  bool contains(Position pos) const;
  std::size_t size() const { return positions_.size(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  int n_;
  std::vector<Position> positions_;  // sorted, unique
};

// (i,j), (j,k) in P imply (i,k) in P.
bool pattern_is_closed(const Pattern& pattern);
// Smallest closed pattern containing the given one.
Pattern pattern_closure(const Pattern& pattern);

// Nonzero entry of a basis matrix.
struct BasisTerm {
  int i;
  int j;
  FieldElement value;
};

// Strictly upper triangular n x n matrix over F_q.
class NilMatrix {
 public:
  NilMatrix(Field field, int n);
  static NilMatrix from_vector(const Field& field, int n, const Vector& coords);
  static NilMatrix unit(const Field& field, int n, Position pos, std::optional<FieldElement> value = std::nullopt);

  int n() const { return n_; }
  const Field& field() const { return field_; }
  FieldElement operator()(int i, int j) const { return a_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
  void set(int i, int j, FieldElement v);
  Vector to_vector() const;
  bool is_zero() const;

  NilMatrix operator+(const NilMatrix& o) const;
  NilMatrix operator-(const NilMatrix& o) const;
  NilMatrix operator*(const NilMatrix& o) const;
  NilMatrix operator-() const;
  NilMatrix scaled(FieldElement c) const;
  NilMatrix power(int k) const;

  friend bool operator==(const NilMatrix& a, const NilMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  Field field_;
  int n_;
  std::vector<FieldElement> a_;  // n*n, row-major, zero on and below the diagonal
};

// Element 1 + X of an algebra group.
struct GroupElement {
  NilMatrix body;

  int n() const { return body.n(); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_identity(const Field& field, int n);
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);
GroupElement group_pow(const GroupElement& g, long long k);
// Multiplicative order of g.
long long group_order_of(const GroupElement& g);

// Exp(X) = sum_{k<p} X^k / k!.
GroupElement trunc_exp(const NilMatrix& x);
// Inverse of trunc_exp on its image; throws std::domain_error when g is not
// of the form Exp(X).
NilMatrix trunc_log(const GroupElement& g);

// A nilpotent subalgebra of u_n(F_q), canonically given by an echelon basis
// over the position coordinates. Pattern algebras are the coordinate case.
class Algebra {
 public:
  static Algebra pattern(const Pattern& pattern, const Field& field);
  static Algebra full(int n, const Field& field);
  // Throws std::invalid_argument unless the subspace is closed under products.
  static Algebra from_subspace(int n, const Field& field, const Subspace& space);
  // a_n(q): upper triangular Toeplitz matrices, X_{i+1,j+1} = X_{ij}.
  static Algebra toeplitz(int n, const Field& field);

  int n() const { return d_->n; }
  const Field& field() const { return d_->field; }
  const Subspace& space() const { return d_->space; }
  std::size_t dim() const { return d_->space.dim(); }
  const std::optional<Pattern>& pattern() const { return d_->pattern; }
  bool is_pattern() const { return d_->pattern.has_value(); }

  const NilMatrix& basis_element(std::size_t k) const { return d_->basis[k]; }
  const std::vector<NilMatrix>& basis() const { return d_->basis; }
  // Position of the leading coordinate of each basis element.
  const std::vector<Position>& pivot_positions() const { return d_->pivot_positions; }
  // Nonzero entries of each basis element.
  const std::vector<std::vector<BasisTerm>>& basis_terms() const { return d_->basis_terms; }

  bool contains(const NilMatrix& x) const;
  // Coefficients of X in the echelon basis (its entries at the pivot positions).
  Vector coordinates(const NilMatrix& x) const;
  NilMatrix from_coordinates(const Vector& coords) const;

  // q^dim; throws CapExceeded above the cap.
  std::uint64_t order(std::uint64_t cap = kDefaultCap) const;
  std::uint64_t index_of(const GroupElement& g) const;
  std::uint64_t index_of_coordinates(const Vector& coords) const;
  Vector coordinates_of_index(std::uint64_t index) const;
  GroupElement element(std::uint64_t index) const;

  // Bodies X of generators 1 + X of the group 1 + n, adapted to the filtration
  // n > n^2 > n^3 > ... and scaled by an F_p-basis of F_q.
  const std::vector<NilMatrix>& generators() const { return d_->generators; }

  bool is_commutative() const;
  // Whether this algebra is contained in other (same n and field).
  bool is_subalgebra_of(const Algebra& other) const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.d_ == b.d_ || (a.n() == b.n() && a.field() == b.field() && a.space() == b.space());
  }

 private:
  struct Data {
    Data(int n_, Field field_, Subspace space_) : n(n_), field(std::move(field_)), space(std::move(space_)) {}
    int n;
    Field field;
    Subspace space;
    std::optional<Pattern> pattern;
    std::vector<NilMatrix> basis;
    std::vector<Position> pivot_positions;
    std::vector<std::vector<BasisTerm>> basis_terms;
    std::vector<NilMatrix> generators;
  };
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static Algebra build(int n, const Field& field, const Subspace& space, std::optional<Pattern> pattern);

  std::shared_ptr<const Data> d_;
};

// Powers n^k of an algebra as subspaces, n^1 = n, ending with the zero space.
std::vector<Subspace> algebra_powers(const Algebra& algebra);

std::vector<GroupElement> enumerate_group(const Algebra& algebra, std::uint64_t cap = kDefaultCap);
void for_each_element(const Algebra& algebra, const std::function<void(std::uint64_t, const GroupElement&)>& f,
                      std::uint64_t cap = kDefaultCap);

struct IdealReport {
  bool subalgebra = false;
  bool left_ideal = false;   // n h contained in h
  bool right_ideal = false;  // h n contained in h
  bool two_sided() const { return left_ideal && right_ideal; }
  // "two-sided ideal", "right ideal", "left ideal", "subalgebra" or "none".
  std::string kind() const;
};

// Classifies a subspace h of the algebra by products of basis elements.
IdealReport ideal_check(const Subspace& h, const Algebra& algebra);

// Projection n = a + h -> a along a two-sided ideal h, and 1 + X -> 1 + pi(X).
class QuotientProjection {
 public:
  // Throws std::invalid_argument unless n = a (+) h with a a subalgebra and h a
  // two-sided ideal of n.
  QuotientProjection(Algebra whole, Algebra part, Subspace ideal);

  const Algebra& whole() const { return whole_; }
  const Algebra& part() const { return part_; }
  const Subspace& ideal() const { return ideal_; }

  NilMatrix project(const NilMatrix& x) const;
  GroupElement project(const GroupElement& g) const;

 private:
  Algebra whole_;
  Algebra part_;
  Subspace ideal_;
  BasisSolver solver_;
};

}  // namespace unitri
