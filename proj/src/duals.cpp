#include "unitri/duals.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace unitri {

namespace {

using Dense = std::vector<FieldElement>;  // n x n row-major

Dense dense_group_matrix(const GroupElement& g) {
  const int n = g.n();
  const Field& f = g.body.field();
  Dense m(static_cast<std::size_t>(n * n), f.zero());
  for (int i = 1; i <= n; ++i) {
    m[static_cast<std::size_t>((i - 1) * n + (i - 1))] = f.one();
    for (int j = i + 1; j <= n; ++j) m[static_cast<std::size_t>((i - 1) * n + (j - 1))] = g.body(i, j);
  }
  return m;
}

Vector restrict_ambient(const Algebra& alg, const Dense& m) {
  const Field& f = alg.field();
  const int n = alg.n();
  Vector out(alg.dim(), f.zero());
  const auto& terms = alg.basis_terms();
  for (std::size_t k = 0; k < terms.size(); ++k) {
    FieldElement acc = f.zero();
    for (const auto& t : terms[k]) {
      const FieldElement v = m[static_cast<std::size_t>((t.i - 1) * n + (t.j - 1))];
      if (v.rep) acc = f.add(acc, f.mul(v, t.value));
    }
    out[k] = acc;
  }
  return out;
}

struct SparseLambda {
  int i, j;
  FieldElement v;
};

std::vector<SparseLambda> sparse_lambda(const Functional& lambda) {
  std::vector<SparseLambda> out;
  for (const auto& e : lambda.entries()) out.push_back({e.pos.i, e.pos.j, e.value});
  return out;
}

// X -> lambda(A X): M = A^T Lambda.
Dense left_mult(const Field& f, int n, const std::vector<SparseLambda>& lam, const Dense& a) {
  Dense m(static_cast<std::size_t>(n * n), f.zero());
  for (const auto& e : lam) {
    for (int k = 1; k <= n; ++k) {
      const FieldElement aik = a[static_cast<std::size_t>((e.i - 1) * n + (k - 1))];
      if (aik.rep == 0) continue;
      auto& slot = m[static_cast<std::size_t>((k - 1) * n + (e.j - 1))];
      slot = f.add(slot, f.mul(aik, e.v));
    }
  }
  return m;
}

// X -> lambda(X B): M = Lambda B^T.
Dense right_mult(const Field& f, int n, const std::vector<SparseLambda>& lam, const Dense& b) {
  Dense m(static_cast<std::size_t>(n * n), f.zero());
  for (const auto& e : lam) {
    for (int k = 1; k <= n; ++k) {
      const FieldElement bkj = b[static_cast<std::size_t>((k - 1) * n + (e.j - 1))];
      if (bkj.rep == 0) continue;
      auto& slot = m[static_cast<std::size_t>((e.i - 1) * n + (k - 1))];
      slot = f.add(slot, f.mul(e.v, bkj));
    }
  }
  return m;
}

// X -> lambda(A X B): M = A^T Lambda B^T.
Dense both_mult(const Field& f, int n, const std::vector<SparseLambda>& lam, const Dense& a, const Dense& b) {
  const Dense m1 = left_mult(f, n, lam, a);
  Dense m(static_cast<std::size_t>(n * n), f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const FieldElement x = m1[static_cast<std::size_t>(i * n + j)];
      if (x.rep == 0) continue;
      for (int k = 0; k < n; ++k) {
        const FieldElement bkj = b[static_cast<std::size_t>(k * n + j)];
        if (bkj.rep == 0) continue;
        auto& slot = m[static_cast<std::size_t>(i * n + k)];
        slot = f.add(slot, f.mul(x, bkj));
      }
    }
  return m;
}

void check_same_group(const GroupElement& g, const Functional& lambda) {
  if (g.n() != lambda.algebra().n() || !lambda.algebra().contains(g.body))
    throw std::invalid_argument("action: group element is outside the algebra group");
}

}  // namespace

Functional Functional::zero(const Algebra& algebra) {
  return Functional(algebra, Vector(algebra.dim(), algebra.field().zero()));
}

Functional Functional::from_entries(const Algebra& algebra, const std::vector<Entry>& entries) {
  const Field& f = algebra.field();
  const int n = algebra.n();
  Dense m(static_cast<std::size_t>(n * n), f.zero());
  for (const auto& e : entries) {
    if (e.pos.i < 1 || e.pos.j > n || e.pos.i >= e.pos.j)
      throw std::invalid_argument("functional: position " + to_string(e.pos) + " is not above the diagonal");
    if (e.value.rep >= f.q()) throw std::invalid_argument("functional: coefficient out of range");
    auto& slot = m[static_cast<std::size_t>((e.pos.i - 1) * n + (e.pos.j - 1))];
    slot = f.add(slot, e.value);
  }
  return Functional(algebra, restrict_ambient(algebra, m));
}

Functional Functional::from_values(const Algebra& algebra, Vector values) {
  if (values.size() != algebra.dim()) throw std::invalid_argument("functional: value vector has wrong length");
  return Functional(algebra, std::move(values));
}

FieldElement Functional::evaluate(const Vector& coords) const {
  const Field& f = algebra_.field();
  FieldElement acc = f.zero();
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k].rep && coords[k].rep) acc = f.add(acc, f.mul(values_[k], coords[k]));
  return acc;
}

FieldElement Functional::operator()(const NilMatrix& x) const { return evaluate(algebra_.coordinates(x)); }

std::vector<Entry> Functional::entries() const {
  std::vector<Entry> out;
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k].rep) out.push_back({algebra_.pivot_positions()[k], values_[k]});
  return out;
}

FieldElement Functional::entry(int i, int j) const {
  const auto& piv = algebra_.pivot_positions();
  auto it = std::lower_bound(piv.begin(), piv.end(), Position{i, j});
  if (it != piv.end() && *it == Position{i, j}) return values_[static_cast<std::size_t>(it - piv.begin())];
  return algebra_.field().zero();
}

std::vector<FieldElement> Functional::ambient_matrix() const {
  const int n = algebra_.n();
  Dense m(static_cast<std::size_t>(n * n), algebra_.field().zero());
  for (const auto& e : entries()) m[static_cast<std::size_t>((e.pos.i - 1) * n + (e.pos.j - 1))] = e.value;
  return m;
}

Functional Functional::operator+(const Functional& o) const {
  Vector v = values_;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = algebra_.field().add(v[k], o.values_[k]);
  return Functional(algebra_, std::move(v));
}

Functional Functional::operator-(const Functional& o) const {
  Vector v = values_;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = algebra_.field().sub(v[k], o.values_[k]);
  return Functional(algebra_, std::move(v));
}

Functional Functional::scaled(FieldElement c) const {
  Vector v = values_;
  for (auto& x : v) x = algebra_.field().mul(c, x);
  return Functional(algebra_, std::move(v));
}

bool Functional::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](FieldElement x) { return x.rep == 0; });
}

std::size_t FunctionalHash::operator()(const Functional& f) const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& x : f.values()) {
    h ^= x.rep;
    h *= 1099511628211ull;
  }
  return h;
}

FieldElement bilinear(const Functional& lambda, const NilMatrix& x, const NilMatrix& y) { return lambda(x * y); }

Functional act_left(const GroupElement& g, const Functional& lambda) {
  check_same_group(g, lambda);
  const Algebra& alg = lambda.algebra();
  const Dense a = dense_group_matrix(group_inv(g));
  return Functional::from_values(alg, restrict_ambient(alg, left_mult(alg.field(), alg.n(), sparse_lambda(lambda), a)));
}

Functional act_right(const Functional& lambda, const GroupElement& g) {
  check_same_group(g, lambda);
  const Algebra& alg = lambda.algebra();
  const Dense b = dense_group_matrix(group_inv(g));
  return Functional::from_values(alg, restrict_ambient(alg, right_mult(alg.field(), alg.n(), sparse_lambda(lambda), b)));
}

Functional act_coadjoint(const Functional& lambda, const GroupElement& g) {
  check_same_group(g, lambda);
  const Algebra& alg = lambda.algebra();
  const Dense a = dense_group_matrix(g);
  const Dense b = dense_group_matrix(group_inv(g));
  return Functional::from_values(alg,
                                 restrict_ambient(alg, both_mult(alg.field(), alg.n(), sparse_lambda(lambda), a, b)));
}

OrbitKind parse_orbit_kind(const std::string& s) {
  if (s == "left") return OrbitKind::Left;
  if (s == "right") return OrbitKind::Right;
  if (s == "two-sided") return OrbitKind::TwoSided;
  if (s == "coadjoint") return OrbitKind::Coadjoint;
  throw std::invalid_argument("unknown orbit kind '" + s + "'");
}

std::string to_string(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::Left: return "left";
    case OrbitKind::Right: return "right";
    case OrbitKind::TwoSided: return "two-sided";
    case OrbitKind::Coadjoint: return "coadjoint";
  }
  return "left";
}

std::vector<Functional> orbit(const Functional& lambda, OrbitKind kind, std::uint64_t cap) {
  return orbit_under(lambda, kind, lambda.algebra(), cap);
}

std::vector<Functional> orbit_under(const Functional& lambda, OrbitKind kind, const Algebra& acting, std::uint64_t cap) {
  const Algebra& alg = lambda.algebra();
  const Field& f = alg.field();
  const int n = alg.n();
  if (!(acting == alg) && !acting.is_subalgebra_of(alg))
    throw std::invalid_argument("orbit: acting group is not a subgroup of the algebra group");
  struct Gen {
    Dense g, ginv;
  };
  std::vector<Gen> gens;
  for (const auto& body : acting.generators()) {
    const GroupElement g{body};
    gens.push_back({dense_group_matrix(g), dense_group_matrix(group_inv(g))});
  }
  std::unordered_set<Functional, FunctionalHash> seen{lambda};
  std::deque<Functional> queue{lambda};
  auto visit = [&](Vector v) {
    Functional mu = Functional::from_values(alg, std::move(v));
    if (seen.insert(mu).second) {
      if (seen.size() > cap)
        throw CapExceeded(to_string(kind) + " orbit exceeds cap " + std::to_string(cap));
      queue.push_back(std::move(mu));
    }
  };
  while (!queue.empty()) {
    const Functional mu = queue.front();
    queue.pop_front();
    const auto lam = sparse_lambda(mu);
    for (const auto& gen : gens) {
      switch (kind) {
        case OrbitKind::Left:
          visit(restrict_ambient(alg, left_mult(f, n, lam, gen.ginv)));
          break;
        case OrbitKind::Right:
          visit(restrict_ambient(alg, right_mult(f, n, lam, gen.ginv)));
          break;
        case OrbitKind::TwoSided:
          visit(restrict_ambient(alg, left_mult(f, n, lam, gen.ginv)));
          visit(restrict_ambient(alg, right_mult(f, n, lam, gen.ginv)));
          break;
        case OrbitKind::Coadjoint:
          visit(restrict_ambient(alg, both_mult(f, n, lam, gen.g, gen.ginv)));
          break;
      }
    }
  }
  std::vector<Functional> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t left_right_intersection_size(const Functional& lambda, std::uint64_t cap) {
  const auto left = orbit(lambda, OrbitKind::Left, cap);
  const auto right = orbit(lambda, OrbitKind::Right, cap);
  std::vector<Functional> both;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(both));
  return both.size();
}

std::string SetPartition::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t a = 0; a < parts.size(); ++a) {
    os << (a ? "," : "") << "{";
    for (std::size_t b = 0; b < parts[a].size(); ++b) os << (b ? "," : "") << parts[a][b];
    os << "}";
  }
  os << "}";
  return os.str();
}

namespace {

void require_pattern(const Functional& lambda, const char* what) {
  if (!lambda.algebra().is_pattern()) throw std::invalid_argument(std::string(what) + " requires a pattern algebra");
}

}  // namespace

bool is_quasi_monomial(const Functional& lambda) {
  require_pattern(lambda, "is_quasi_monomial");
  const int n = lambda.algebra().n();
  std::vector<int> rows(static_cast<std::size_t>(n + 1), 0), cols(static_cast<std::size_t>(n + 1), 0);
  for (const auto& e : lambda.entries()) {
    if (++rows[static_cast<std::size_t>(e.pos.i)] > 1) return false;
    if (++cols[static_cast<std::size_t>(e.pos.j)] > 1) return false;
  }
  return true;
}

SetPartition shape(const Functional& lambda) {
  if (!is_quasi_monomial(lambda)) throw std::invalid_argument("shape: functional is not quasi-monomial");
  const int n = lambda.algebra().n();
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& e : lambda.entries()) {
    const int a = find(e.pos.i), b = find(e.pos.j);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  SetPartition out{n, {}};
  std::vector<int> slot(static_cast<std::size_t>(n + 1), -1);
  for (int x = 1; x <= n; ++x) {
    const int r = find(x);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.parts.size());
      out.parts.emplace_back();
    }
    out.parts[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x);
  }
  return out;
}

Functional torus_act(const std::vector<FieldElement>& diagonal, const Functional& lambda) {
  require_pattern(lambda, "torus_act");
  const Algebra& alg = lambda.algebra();
  const Field& f = alg.field();
  if (diagonal.size() != static_cast<std::size_t>(alg.n())) throw std::invalid_argument("torus_act: diagonal has wrong length");
  for (const auto& d : diagonal)
    if (d.rep == 0 || d.rep >= f.q()) throw std::invalid_argument("torus_act: diagonal entries must be nonzero field elements");
  Vector v = lambda.values();
  const auto& piv = alg.pivot_positions();
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& pos = piv[k];
    v[k] = f.mul(f.div(diagonal[static_cast<std::size_t>(pos.i - 1)], diagonal[static_cast<std::size_t>(pos.j - 1)]), v[k]);
  }
  return Functional::from_values(alg, std::move(v));
}

std::vector<Functional> quasi_monomial_functionals(const Algebra& algebra, std::uint64_t cap) {
  if (!algebra.is_pattern()) throw std::invalid_argument("quasi_monomial_functionals requires a pattern algebra");
  const Field& f = algebra.field();
  const int n = algebra.n();
  const auto& piv = algebra.pivot_positions();
  std::vector<Functional> out;
  Vector cur(algebra.dim(), f.zero());
  std::vector<bool> col_used(static_cast<std::size_t>(n + 1), false);
  // Row by row: leave row i empty or place one nonzero value in a free column.
  std::function<void(int)> rec = [&](int row) {
    if (row > n) {
      out.push_back(Functional::from_values(algebra, cur));
      if (out.size() > cap) throw CapExceeded("quasi-monomial enumeration exceeds cap");
      return;
    }
    rec(row + 1);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      if (piv[k].i != row || col_used[static_cast<std::size_t>(piv[k].j)]) continue;
      col_used[static_cast<std::size_t>(piv[k].j)] = true;
      for (std::uint32_t c = 1; c < f.q(); ++c) {
        cur[k] = {c};
        rec(row + 1);
      }
      cur[k] = f.zero();
      col_used[static_cast<std::size_t>(piv[k].j)] = false;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace unitri
