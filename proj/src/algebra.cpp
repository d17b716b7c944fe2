#include "unitri/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace unitri {

std::size_t triangle_size(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

std::size_t coordinate_of(int n, Position pos) {
  if (pos.i < 1 || pos.j > n || pos.i >= pos.j)
    throw std::invalid_argument("position " + to_string(pos) + " is not above the diagonal of a " +
                                std::to_string(n) + "x" + std::to_string(n) + " matrix");
  const std::size_t i = static_cast<std::size_t>(pos.i - 1);
  const std::size_t nn = static_cast<std::size_t>(n);
  // rows before i contribute (n-1) + (n-2) + ... + (n-i)
  return i * nn - i * (i + 1) / 2 + static_cast<std::size_t>(pos.j - pos.i - 1);
}

Position position_of(int n, std::size_t coord) {
  std::size_t c = coord;
  for (int i = 1; i < n; ++i) {
    const std::size_t row = static_cast<std::size_t>(n - i);
    if (c < row) return {i, i + 1 + static_cast<int>(c)};
    c -= row;
  }
  throw std::invalid_argument("coordinate out of range");
}

std::string to_string(Position pos) { return "(" + std::to_string(pos.i) + "," + std::to_string(pos.j) + ")"; }

Pattern::Pattern(int n, std::vector<Position> positions) : n_(n), positions_(std::move(positions)) {
  if (n < 1) throw std::invalid_argument("pattern: n must be positive");
  for (const auto& pos : positions_)
    if (pos.i < 1 || pos.j > n || pos.i >= pos.j)
      throw std::invalid_argument("pattern: position " + to_string(pos) + " is not above the diagonal");
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

Pattern Pattern::full(int n) {
  std::vector<Position> pos;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pos.push_back({i, j});
  return Pattern(n, std::move(pos));
}

bool Pattern::contains(Position pos) const { return std::binary_search(positions_.begin(), positions_.end(), pos); }

bool pattern_is_closed(const Pattern& pattern) {
  for (const auto& a : pattern.positions())
    for (const auto& b : pattern.positions())
      if (a.j == b.i && !pattern.contains({a.i, b.j})) return false;
  return true;
}

Pattern pattern_closure(const Pattern& pattern) {
  std::set<Position> cur(pattern.positions().begin(), pattern.positions().end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Position> add;
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (a.j == b.i && !cur.count({a.i, b.j})) add.push_back({a.i, b.j});
    for (const auto& p : add) grew |= cur.insert(p).second;
  }
  return Pattern(pattern.n(), std::vector<Position>(cur.begin(), cur.end()));
}

NilMatrix::NilMatrix(Field field, int n)
    : field_(std::move(field)), n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
}

NilMatrix NilMatrix::from_vector(const Field& field, int n, const Vector& coords) {
  if (coords.size() != triangle_size(n)) throw std::invalid_argument("matrix: coordinate vector has wrong length");
  NilMatrix m(field, n);
  std::size_t c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m.a_[static_cast<std::size_t>((i - 1) * n + (j - 1))] = coords[c++];
  return m;
}

NilMatrix NilMatrix::unit(const Field& field, int n, Position pos, std::optional<FieldElement> value) {
  NilMatrix m(field, n);
  m.set(pos.i, pos.j, value.value_or(field.one()));
  return m;
}

void NilMatrix::set(int i, int j, FieldElement v) {
  if (i < 1 || j > n_ || i >= j) throw std::invalid_argument("matrix: entry " + to_string({i, j}) + " is not above the diagonal");
  if (v.rep >= field_.q()) throw std::invalid_argument("matrix: field element out of range");
  a_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] = v;
}

Vector NilMatrix::to_vector() const {
  Vector out;
  out.reserve(triangle_size(n_));
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.push_back((*this)(i, j));
  return out;
}

bool NilMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x.rep) return false;
  return true;
}

NilMatrix NilMatrix::operator+(const NilMatrix& o) const {
  NilMatrix out = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_.add(a_[k], o.a_[k]);
  return out;
}

NilMatrix NilMatrix::operator-(const NilMatrix& o) const {
  NilMatrix out = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_.sub(a_[k], o.a_[k]);
  return out;
}

NilMatrix NilMatrix::operator*(const NilMatrix& o) const {
  if (o.n_ != n_) throw std::invalid_argument("matrix: size mismatch");
  NilMatrix out(field_, n_);
  const std::size_t n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      const FieldElement x = a_[i * n + k];
      if (x.rep == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        const FieldElement y = o.a_[k * n + j];
        if (y.rep) out.a_[i * n + j] = field_.add(out.a_[i * n + j], field_.mul(x, y));
      }
    }
  }
  return out;
}

NilMatrix NilMatrix::operator-() const {
  NilMatrix out = *this;
  for (auto& x : out.a_) x = field_.neg(x);
  return out;
}

NilMatrix NilMatrix::scaled(FieldElement c) const {
  NilMatrix out = *this;
  for (auto& x : out.a_) x = field_.mul(c, x);
  return out;
}

NilMatrix NilMatrix::power(int k) const {
  if (k < 0) throw std::invalid_argument("matrix: negative power");
  if (k == 0) throw std::invalid_argument("matrix: X^0 is not strictly upper triangular");
  NilMatrix out = *this;
  for (int s = 1; s < k; ++s) out = out * *this;
  return out;
}

GroupElement group_identity(const Field& field, int n) { return {NilMatrix(field, n)}; }

GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  return {g.body + h.body + g.body * h.body};
}

GroupElement group_inv(const GroupElement& g) {
  // (1+X)^{-1} = 1 - X + X^2 - ...
  NilMatrix term = -g.body;
  NilMatrix acc = term;
  while (true) {
    term = term * (-g.body);
    if (term.is_zero()) break;
    acc = acc + term;
  }
  return {acc};
}

GroupElement group_pow(const GroupElement& g, long long k) {
  GroupElement base = k < 0 ? group_inv(g) : g;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  GroupElement out = group_identity(g.body.field(), g.n());
  while (e > 0) {
    if (e & 1) out = group_mul(out, base);
    base = group_mul(base, base);
    e >>= 1;
  }
  return out;
}

long long group_order_of(const GroupElement& g) {
  long long order = 1;
  GroupElement cur = g;
  while (!cur.body.is_zero()) {
    cur = group_mul(cur, g);
    ++order;
  }
  return order;
}

GroupElement trunc_exp(const NilMatrix& x) {
  const Field& f = x.field();
  NilMatrix acc = x;
  NilMatrix term = x;
  long long fact = 1;
  for (int k = 2; k < f.p(); ++k) {
    term = term * x;
    if (term.is_zero()) break;
    fact = fact * k % f.p();
    acc = acc + term.scaled(f.inv(f.from_int(fact)));
  }
  return {acc};
}

NilMatrix trunc_log(const GroupElement& g) {
  const NilMatrix& y = g.body;
  NilMatrix x = y;
  for (int step = 0; step <= g.n() + 1; ++step) {
    // X <- (g - 1) - (Exp(X) - 1 - X)
    NilMatrix next = y - (trunc_exp(x).body - x);
    if (next == x) break;
    x = std::move(next);
  }
  if (!(trunc_exp(x).body == y)) throw std::domain_error("trunc_log: fixed-point iteration did not converge");
  return x;
}

Algebra Algebra::build(int n, const Field& field, const Subspace& space, std::optional<Pattern> pattern) {
  if (space.ambient_dim() != triangle_size(n)) throw std::invalid_argument("algebra: subspace has wrong ambient dimension");
  auto d = std::make_shared<Data>(n, field, space);
  d->pattern = std::move(pattern);
  for (std::size_t k = 0; k < space.dim(); ++k) {
    d->basis.push_back(NilMatrix::from_vector(field, n, space.basis()[k]));
    d->pivot_positions.push_back(position_of(n, space.pivots()[k]));
  }
  {
    const auto all = Pattern::full(n).positions();
    for (const auto& sv : space.sparse_basis()) {
      std::vector<BasisTerm> terms;
      for (const auto& [c, val] : sv) terms.push_back({all[c].i, all[c].j, val});
      d->basis_terms.push_back(std::move(terms));
    }
  }
  if (d->pattern) {
    // Elementary matrices already respect the filtration by powers.
    for (const auto& body : d->basis)
      for (const auto& t : field.prime_basis()) d->generators.push_back(body.scaled(t));
    return Algebra(d);
  }
  for (const auto& a : d->basis)
    for (const auto& b : d->basis)
      if (!space.contains((a * b).to_vector())) throw std::invalid_argument("algebra: subspace is not closed under multiplication");

  Algebra alg(d);
  // Filtration-adapted generators: extend a basis of n^{k+1} to one of n^k.
  const auto powers = algebra_powers(alg);
  std::vector<Vector> chosen;
  for (std::size_t layer = 0; layer + 1 < powers.size(); ++layer) {
    std::vector<Vector> echelon;
    std::vector<std::size_t> piv;
    auto insert = [&](Vector v) {
      for (std::size_t r = 0; r < echelon.size(); ++r) {
        const FieldElement c = v[piv[r]];
        if (c.rep == 0) continue;
        const FieldElement m = field.neg(c);
        for (std::size_t k = 0; k < v.size(); ++k)
          if (echelon[r][k].rep) v[k] = field.add(v[k], field.mul(m, echelon[r][k]));
      }
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].rep == 0) continue;
        const FieldElement s = field.inv(v[k]);
        for (auto& x : v) x = field.mul(x, s);
        echelon.push_back(std::move(v));
        piv.push_back(k);
        return true;
      }
      return false;
    };
    for (const auto& v : powers[layer + 1].basis()) insert(v);
    for (const auto& v : powers[layer].basis())
      if (insert(v)) chosen.push_back(v);
  }
  for (const auto& v : chosen) {
    const NilMatrix body = NilMatrix::from_vector(field, n, v);
    for (const auto& t : field.prime_basis()) d->generators.push_back(body.scaled(t));
  }
  return alg;
}

Algebra Algebra::pattern(const Pattern& pattern, const Field& field) {
  if (!pattern_is_closed(pattern)) throw std::invalid_argument("algebra: pattern is not closed");
  std::vector<std::size_t> coords;
  for (const auto& pos : pattern.positions()) coords.push_back(coordinate_of(pattern.n(), pos));
  return build(pattern.n(), field, Subspace::coordinate(field, triangle_size(pattern.n()), coords), pattern);
}

Algebra Algebra::full(int n, const Field& field) { return pattern(Pattern::full(n), field); }

Algebra Algebra::from_subspace(int n, const Field& field, const Subspace& space) {
  return build(n, field, space, std::nullopt);
}

Algebra Algebra::toeplitz(int n, const Field& field) {
  std::vector<Vector> gens;
  for (int d = 1; d < n; ++d) {
    NilMatrix m(field, n);
    for (int i = 1; i + d <= n; ++i) m.set(i, i + d, field.one());
    gens.push_back(m.to_vector());
  }
  return from_subspace(n, field, Subspace::span(field, triangle_size(n), std::move(gens)));
}

bool Algebra::contains(const NilMatrix& x) const {
  if (x.n() != n()) return false;
  return space().contains(x.to_vector());
}

Vector Algebra::coordinates(const NilMatrix& x) const {
  Vector out;
  out.reserve(dim());
  for (const auto& pos : pivot_positions()) out.push_back(x(pos.i, pos.j));
  return out;
}

NilMatrix Algebra::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("algebra: coordinate vector has wrong length");
  const Field& f = field();
  NilMatrix out(f, n());
  Vector acc(space().ambient_dim(), f.zero());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].rep == 0) continue;
    for (const auto& [c, val] : space().sparse_basis()[k]) acc[c] = f.add(acc[c], f.mul(coords[k], val));
  }
  return NilMatrix::from_vector(f, n(), acc);
}

std::uint64_t Algebra::order(std::uint64_t cap) const {
  std::uint64_t out = 1;
  for (std::size_t k = 0; k < dim(); ++k) {
    out *= field().q();
    if (out > cap) throw CapExceeded("group of order q^" + std::to_string(dim()) + " exceeds cap " + std::to_string(cap));
  }
  return out;
}

std::uint64_t Algebra::index_of_coordinates(const Vector& coords) const {
  std::uint64_t idx = 0;
  for (std::size_t k = coords.size(); k-- > 0;) idx = idx * field().q() + coords[k].rep;
  return idx;
}

std::uint64_t Algebra::index_of(const GroupElement& g) const { return index_of_coordinates(coordinates(g.body)); }

Vector Algebra::coordinates_of_index(std::uint64_t index) const {
  Vector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    out[k] = {static_cast<std::uint32_t>(index % field().q())};
    index /= field().q();
  }
  return out;
}

GroupElement Algebra::element(std::uint64_t index) const { return {from_coordinates(coordinates_of_index(index))}; }

bool Algebra::is_commutative() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = a + 1; b < dim(); ++b)
      if (!(basis_element(a) * basis_element(b) == basis_element(b) * basis_element(a))) return false;
  return true;
}

bool Algebra::is_subalgebra_of(const Algebra& other) const {
  return n() == other.n() && field() == other.field() && space().is_subspace_of(other.space());
}

std::vector<Subspace> algebra_powers(const Algebra& algebra) {
  std::vector<Subspace> out{algebra.space()};
  const Field& f = algebra.field();
  while (out.back().dim() > 0) {
    std::vector<Vector> gens;
    for (const auto& x : out.back().basis()) {
      const NilMatrix xm = NilMatrix::from_vector(f, algebra.n(), x);
      for (const auto& b : algebra.basis()) gens.push_back((xm * b).to_vector());
    }
    out.push_back(Subspace::span(f, algebra.space().ambient_dim(), std::move(gens)));
  }
  return out;
}

std::vector<GroupElement> enumerate_group(const Algebra& algebra, std::uint64_t cap) {
  const std::uint64_t order = algebra.order(cap);
  std::vector<GroupElement> out;
  out.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) out.push_back(algebra.element(i));
  return out;
}

void for_each_element(const Algebra& algebra, const std::function<void(std::uint64_t, const GroupElement&)>& f,
                      std::uint64_t cap) {
  const std::uint64_t order = algebra.order(cap);
  for (std::uint64_t i = 0; i < order; ++i) f(i, algebra.element(i));
}

std::string IdealReport::kind() const {
  if (!subalgebra) return "none";
  if (two_sided()) return "two-sided ideal";
  if (right_ideal) return "right ideal";
  if (left_ideal) return "left ideal";
  return "subalgebra";
}

IdealReport ideal_check(const Subspace& h, const Algebra& algebra) {
  if (!h.is_subspace_of(algebra.space())) throw std::invalid_argument("ideal_check: subspace is not inside the algebra");
  const Field& f = algebra.field();
  std::vector<NilMatrix> hb;
  for (const auto& v : h.basis()) hb.push_back(NilMatrix::from_vector(f, algebra.n(), v));
  IdealReport rep{true, true, true};
  for (const auto& x : hb) {
    for (const auto& y : hb)
      if (rep.subalgebra && !h.contains((x * y).to_vector())) rep.subalgebra = false;
    for (const auto& b : algebra.basis()) {
      if (rep.left_ideal && !h.contains((b * x).to_vector())) rep.left_ideal = false;
      if (rep.right_ideal && !h.contains((x * b).to_vector())) rep.right_ideal = false;
    }
  }
  return rep;
}

namespace {

std::vector<Vector> stacked(const Algebra& part, const Subspace& ideal) {
  std::vector<Vector> out = part.space().basis();
  out.insert(out.end(), ideal.basis().begin(), ideal.basis().end());
  return out;
}

}  // namespace

QuotientProjection::QuotientProjection(Algebra whole, Algebra part, Subspace ideal)
    : whole_(std::move(whole)),
      part_(std::move(part)),
      ideal_(std::move(ideal)),
      solver_(whole_.field(), stacked(part_, ideal_), whole_.space().ambient_dim()) {
  if (!part_.is_subalgebra_of(whole_)) throw std::invalid_argument("projection: complement is not a subalgebra of the algebra");
  if (part_.dim() + ideal_.dim() != whole_.dim() || !ideal_.is_subspace_of(whole_.space()))
    throw std::invalid_argument("projection: the algebra is not the direct sum of complement and ideal");
  if (!ideal_check(ideal_, whole_).two_sided()) throw std::invalid_argument("projection: kernel is not a two-sided ideal");
}

NilMatrix QuotientProjection::project(const NilMatrix& x) const {
  auto c = solver_.solve(x.to_vector());
  if (!c) throw std::invalid_argument("projection: matrix is outside the algebra");
  Vector coords(part_.dim());
  // The first dim(a) coefficients are with respect to the echelon basis of a.
  for (std::size_t k = 0; k < part_.dim(); ++k) coords[k] = (*c)[k];
  return part_.from_coordinates(coords);
}

GroupElement QuotientProjection::project(const GroupElement& g) const { return {project(g.body)}; }

}  // namespace unitri
