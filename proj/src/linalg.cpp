#include "unitri/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace unitri {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].rep != 0) out.emplace_back(i, v[i]);
  return out;
}

namespace {

std::vector<std::size_t> rref_gf2(std::vector<Vector>& rows, std::size_t cols) {
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> packed(rows.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c].rep) packed[r][c / 64] |= std::uint64_t{1} << (c % 64);

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < packed.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t sel = rank;
    while (sel < packed.size() && !(packed[sel][w] & bit)) ++sel;
    if (sel == packed.size()) continue;
    std::swap(packed[sel], packed[rank]);
    for (std::size_t r = 0; r < packed.size(); ++r) {
      if (r != rank && (packed[r][w] & bit)) {
        for (std::size_t k = w; k < words; ++k) packed[r][k] ^= packed[rank][k];
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.assign(rank, Vector(cols));
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols; ++c) rows[r][c] = {static_cast<std::uint32_t>((packed[r][c / 64] >> (c % 64)) & 1)};
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(const Field& field, std::vector<Vector>& rows, std::size_t cols) {
  for (const auto& row : rows)
    if (row.size() != cols) throw std::invalid_argument("rref: ragged rows");
  if (field.q() == 2) return rref_gf2(rows, cols);

  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][c].rep == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    Vector& piv = rows[rank];
    const FieldElement scale = field.inv(piv[c]);
    for (std::size_t k = c; k < cols; ++k) piv[k] = field.mul(piv[k], scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].rep == 0) continue;
      const FieldElement f = field.neg(rows[r][c]);
      Vector& row = rows[r];
      for (std::size_t k = c; k < cols; ++k)
        if (piv[k].rep) row[k] = field.add(row[k], field.mul(f, piv[k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::vector<Vector> nullspace(const Field& field, std::vector<Vector> rows, std::size_t cols) {
  const auto pivots = rref(field, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(rows[r][f]);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(std::move(field)), ambient_dim_(ambient_dim) {}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim, std::vector<Vector> generators) {
  Subspace s(field, ambient_dim);
  s.pivots_ = rref(field, generators, ambient_dim);
  s.basis_ = std::move(generators);
  for (const auto& b : s.basis_) s.sparse_.push_back(to_sparse(b));
  return s;
}

Subspace Subspace::whole(const Field& field, std::size_t ambient_dim) {
  std::vector<std::size_t> all(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) all[i] = i;
  return coordinate(field, ambient_dim, all);
}

Subspace Subspace::coordinate(const Field& field, std::size_t ambient_dim, const std::vector<std::size_t>& coords) {
  std::vector<Vector> gens;
  for (auto c : coords) {
    if (c >= ambient_dim) throw std::invalid_argument("subspace: coordinate out of range");
    Vector v(ambient_dim, field.zero());
    v[c] = field.one();
    gens.push_back(std::move(v));
  }
  return span(field, ambient_dim, std::move(gens));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("subspace: vector has wrong length");
  Vector coeffs(basis_.size());
  Vector rest = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const FieldElement c = rest[pivots_[r]];
    coeffs[r] = c;
    if (c.rep == 0) continue;
    const FieldElement f = field_.neg(c);
    for (const auto& [k, val] : sparse_[r]) rest[k] = field_.add(rest[k], field_.mul(f, val));
  }
  for (const auto& x : rest)
    if (x.rep != 0) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (const auto& b : basis_)
    if (!other.contains(b)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_dim_, std::move(gens));
}

Subspace Subspace::annihilator() const {
  return span(field_, ambient_dim_, nullspace(field_, basis_, ambient_dim_));
}

Subspace Subspace::intersection(const Subspace& other) const {
  // x = sum a_r b_r lies in other iff w . x = 0 for every w in other's annihilator.
  const Subspace ann = other.annihilator();
  std::vector<Vector> eqs;
  for (const auto& w : ann.basis_) {
    Vector row(basis_.size(), field_.zero());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      FieldElement acc = field_.zero();
      for (const auto& [k, val] : sparse_[r]) acc = field_.add(acc, field_.mul(w[k], val));
      row[r] = acc;
    }
    eqs.push_back(std::move(row));
  }
  std::vector<Vector> gens;
  for (const auto& a : nullspace(field_, std::move(eqs), basis_.size())) {
    Vector x(ambient_dim_, field_.zero());
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (a[r].rep == 0) continue;
      for (const auto& [k, val] : sparse_[r]) x[k] = field_.add(x[k], field_.mul(a[r], val));
    }
    gens.push_back(std::move(x));
  }
  return span(field_, ambient_dim_, std::move(gens));
}

std::vector<std::size_t> Subspace::zero_coordinates() const {
  std::vector<bool> used(ambient_dim_, false);
  for (const auto& sv : sparse_)
    for (const auto& [k, val] : sv) used[k] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_dim_; ++i)
    if (!used[i]) out.push_back(i);
  return out;
}


BasisSolver::BasisSolver(const Field& field, const std::vector<Vector>& family, std::size_t cols)
    : field_(field), count_(family.size()), cols_(cols) {
  std::vector<Vector> aug;
  for (std::size_t i = 0; i < family.size(); ++i) {
    Vector row = family[i];
    if (row.size() != cols) throw std::invalid_argument("basis solver: ragged family");
    row.resize(cols + count_, field.zero());
    row[cols + i] = field.one();
    aug.push_back(std::move(row));
  }
  auto piv = rref(field, aug, cols + count_);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= cols) throw std::invalid_argument("basis solver: family is linearly dependent");
    echelon_.emplace_back(aug[r].begin(), aug[r].begin() + static_cast<std::ptrdiff_t>(cols));
    transform_.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(cols), aug[r].end());
    pivots_.push_back(piv[r]);
  }
  if (pivots_.size() != count_) throw std::invalid_argument("basis solver: family is linearly dependent");
}

std::optional<Vector> BasisSolver::solve(const Vector& v) const {
  Vector rest = v;
  Vector out(count_, field_.zero());
  for (std::size_t r = 0; r < echelon_.size(); ++r) {
    const FieldElement c = rest[pivots_[r]];
    if (c.rep == 0) continue;
    const FieldElement f = field_.neg(c);
    for (std::size_t k = 0; k < cols_; ++k)
      if (echelon_[r][k].rep) rest[k] = field_.add(rest[k], field_.mul(f, echelon_[r][k]));
    for (std::size_t i = 0; i < count_; ++i)
      if (transform_[r][i].rep) out[i] = field_.add(out[i], field_.mul(c, transform_[r][i]));
  }
  for (const auto& x : rest)
    if (x.rep) return std::nullopt;
  return out;
}

}  // namespace unitri
