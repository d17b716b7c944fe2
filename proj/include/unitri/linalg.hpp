#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "unitri/field.hpp"

namespace unitri {

using Vector = std::vector<FieldElement>;
// Nonzero (index, value) pairs in increasing index order.
using SparseVector = std::vector<std::pair<std::size_t, FieldElement>>;

SparseVector to_sparse(const Vector& v);

// Reduces the rows in place to reduced row echelon form, drops zero rows and
// returns the pivot column of each remaining row. Rows over F_2 are packed into
// 64-bit words during elimination.
std::vector<std::size_t> rref(const Field& field, std::vector<Vector>& rows, std::size_t cols);

// Basis of {x : M x = 0} for M given by rows of length cols.
std::vector<Vector> nullspace(const Field& field, std::vector<Vector> rows, std::size_t cols);

// Canonical subspace of F_q^N stored in reduced row echelon form.
class Subspace {
 public:
  Subspace() : ambient_dim_(0) {}
  Subspace(Field field, std::size_t ambient_dim);

  static Subspace span(const Field& field, std::size_t ambient_dim, std::vector<Vector> generators);
  static Subspace whole(const Field& field, std::size_t ambient_dim);
  // Span of the unit vectors at the given coordinates.
  static Subspace coordinate(const Field& field, std::size_t ambient_dim, const std::vector<std::size_t>& coords);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<SparseVector>& sparse_basis() const { return sparse_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  // Coefficients of v in the echelon basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool is_subspace_of(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  // {w : w . v = 0 for all v in this}.
  Subspace annihilator() const;
  // Coordinates on which every vector of the subspace vanishes.
  std::vector<std::size_t> zero_coordinates() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
  std::vector<SparseVector> sparse_;
  std::vector<std::size_t> pivots_;
};


// Solves for coefficients of a vector in a fixed (not necessarily echelon)
// independent family.
class BasisSolver {
 public:
  BasisSolver(const Field& field, const std::vector<Vector>& family, std::size_t cols);
  std::size_t size() const { return count_; }
  // c with sum_i c_i family_i = v, or nullopt outside the span.
  std::optional<Vector> solve(const Vector& v) const;

 private:
  Field field_;
  std::size_t count_;
  std::size_t cols_;
  std::vector<Vector> echelon_;         // echelon rows of the family
  std::vector<std::size_t> pivots_;
  std::vector<Vector> transform_;       // echelon_[r] = sum_i transform_[r][i] family_i
};

}  // namespace unitri
