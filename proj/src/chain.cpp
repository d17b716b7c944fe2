#include "unitri/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace unitri {

namespace {

struct Term {
  int i, j;
  FieldElement v;
};

std::vector<std::vector<Term>> terms_of(int n, const Subspace& s) {
  const auto all = Pattern::full(n).positions();
  std::vector<std::vector<Term>> out;
  for (const auto& sv : s.sparse_basis()) {
    std::vector<Term> t;
    for (const auto& [c, val] : sv) t.push_back({all[c].i, all[c].j, val});
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::vector<Vector> gram_matrix(const Functional& lambda, const Subspace& s, const Subspace& t) {
  const Algebra& alg = lambda.algebra();
  const Field& f = alg.field();
  const int n = alg.n();
  const std::size_t nn = static_cast<std::size_t>(n);
  // Rows of Lambda: entries (j, value) for each row i.
  std::vector<std::vector<std::pair<int, FieldElement>>> lam_rows(nn + 1);
  for (const auto& e : lambda.entries()) lam_rows[static_cast<std::size_t>(e.pos.i)].push_back({e.pos.j, e.value});

  const auto s_terms = terms_of(n, s);
  const auto t_terms = terms_of(n, t);
  // gram[b][a] = lambda(s_a t_b); the left kernel is its nullspace.
  std::vector<Vector> gram(t.dim(), Vector(s.dim(), f.zero()));
  std::vector<FieldElement> w(nn * nn);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    // w(k, j) = sum_i (s_a)_{ik} Lambda_{ij}, so lambda(s_a Y) = sum w(k,j) Y_kj.
    std::fill(w.begin(), w.end(), f.zero());
    bool any = false;
    for (const auto& term : s_terms[a]) {
      for (const auto& [j, lv] : lam_rows[static_cast<std::size_t>(term.i)]) {
        if (j <= term.j) continue;
        auto& slot = w[static_cast<std::size_t>(term.j - 1) * nn + static_cast<std::size_t>(j - 1)];
        slot = f.add(slot, f.mul(term.v, lv));
        any = true;
      }
    }
    if (!any) continue;
    for (std::size_t b = 0; b < t.dim(); ++b) {
      FieldElement acc = f.zero();
      for (const auto& term : t_terms[b]) {
        const FieldElement x = w[static_cast<std::size_t>(term.i - 1) * nn + static_cast<std::size_t>(term.j - 1)];
        if (x.rep) acc = f.add(acc, f.mul(x, term.v));
      }
      gram[b][a] = acc;
    }
  }
  return gram;
}

Subspace left_kernel(const Functional& lambda, const Subspace& s, const Subspace& t) {
  const Field& f = lambda.algebra().field();
  std::vector<Vector> gens;
  for (const auto& c : nullspace(f, gram_matrix(lambda, s, t), s.dim())) {
    Vector x(s.ambient_dim(), f.zero());
    for (std::size_t a = 0; a < s.dim(); ++a) {
      if (c[a].rep == 0) continue;
      for (const auto& [k, val] : s.sparse_basis()[a]) x[k] = f.add(x[k], f.mul(c[a], val));
    }
    gens.push_back(std::move(x));
  }
  return Subspace::span(f, s.ambient_dim(), std::move(gens));
}

ChainResult chain_compute(const Functional& lambda) {
  const Algebra& alg = lambda.algebra();
  ChainResult out;
  out.algebra_dim = alg.dim();
  out.l_list.push_back(Subspace(alg.field(), alg.space().ambient_dim()));
  out.s_list.push_back(alg.space());
  for (std::size_t i = 0;; ++i) {
    if (i > alg.dim() + 1) throw std::logic_error("chain: no stabilization within dim + 1 steps");
    Subspace l_next = left_kernel(lambda, out.s_list[i], out.s_list[i]);
    Subspace s_next = left_kernel(lambda, out.s_list[i], l_next);
    out.l_list.push_back(std::move(l_next));
    out.s_list.push_back(std::move(s_next));
    if (out.s_list[i + 1] == out.s_list[i]) {
      out.d = static_cast<int>(i + 1);
      break;
    }
  }
  out.l_bar = out.l_list.back();
  out.s_bar = out.s_list.back();
  return out;
}

QuasiMonomialKernels quasimonomial_kernels(const Functional& lambda) {
  if (!is_quasi_monomial(lambda)) throw std::invalid_argument("quasimonomial_kernels: functional is not quasi-monomial");
  const Algebra& alg = lambda.algebra();
  const Pattern& pattern = *alg.pattern();
  const int n = alg.n();
  std::vector<int> row_partner(static_cast<std::size_t>(n + 1), 0);  // k with lambda_ik != 0
  for (const auto& e : lambda.entries()) row_partner[static_cast<std::size_t>(e.pos.i)] = e.pos.j;

  QuasiMonomialKernels out;
  for (const auto& pos : pattern.positions()) {
    const int k = row_partner[static_cast<std::size_t>(pos.i)];
    if (k > pos.j && pattern.contains({pos.j, k})) out.perp_l.insert(pos);
  }
  for (const auto& pos : pattern.positions()) {
    const int k = row_partner[static_cast<std::size_t>(pos.i)];
    if (k > pos.j && pattern.contains({pos.j, k}) && !out.perp_l.count({pos.j, k})) out.perp_s.insert(pos);
  }
  std::vector<std::size_t> l_coords, s_coords;
  for (const auto& pos : pattern.positions()) {
    if (!out.perp_l.count(pos)) l_coords.push_back(coordinate_of(n, pos));
    if (!out.perp_s.count(pos)) s_coords.push_back(coordinate_of(n, pos));
  }
  const std::size_t dim = triangle_size(n);
  out.l1 = Subspace::coordinate(alg.field(), dim, l_coords);
  out.s1 = Subspace::coordinate(alg.field(), dim, s_coords);
  out.right_orbit_directions.assign(out.perp_l.begin(), out.perp_l.end());
  return out;
}

IrreducibilityReport quasimonomial_irreducibility_check(const Functional& lambda) {
  if (!is_quasi_monomial(lambda)) throw std::invalid_argument("irreducibility check: functional is not quasi-monomial");
  IrreducibilityReport rep;
  rep.chain = chain_compute(lambda);
  rep.l_bar_equals_s_bar = rep.chain.l_bar == rep.chain.s_bar;
  rep.common = rep.chain.s_bar;
  return rep;
}

bool in_affine_orbit(const Functional& lambda, const std::vector<Position>& directions, const Functional& mu) {
  const Functional diff = mu - lambda;
  for (const auto& e : diff.entries())
    if (!std::binary_search(directions.begin(), directions.end(), e.pos)) return false;
  return true;
}

}  // namespace unitri
