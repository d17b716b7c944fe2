#pragma once

#include <set>
#include <vector>

#include "unitri/duals.hpp"

namespace unitri {

// l^0 = 0, s^0 = n;
// l^{i+1} = {X in s^i : lambda(XY) = 0 for all Y in s^i},
// s^{i+1} = {X in s^i : lambda(XY) = 0 for all Y in l^{i+1}}.
struct ChainResult {
  std::vector<Subspace> l_list;  // l^0 .. l^d
  std::vector<Subspace> s_list;  // s^0 .. s^d
  int d = 0;                     // least d >= 1 with s^{d-1} = s^d
  Subspace l_bar;
  Subspace s_bar;
  std::size_t algebra_dim = 0;

  // chi_lambda(1) = q^{dim n - dim l^1}; <chi, chi> = q^{dim s^1 - dim l^1}.
  std::size_t supercharacter_degree_exponent() const { return algebra_dim - l_list.at(1).dim(); }
  std::size_t supercharacter_norm_exponent() const { return s_list.at(1).dim() - l_list.at(1).dim(); }
  // xi_lambda(1) = q^{dim n - dim l_bar}; <xi, xi> = q^{dim s_bar - dim l_bar}.
  std::size_t xi_degree_exponent() const { return algebra_dim - l_bar.dim(); }
  std::size_t xi_norm_exponent() const { return s_bar.dim() - l_bar.dim(); }
};

ChainResult chain_compute(const Functional& lambda);

// gram[b][a] = lambda(s_a t_b) over the echelon bases of S and T.
std::vector<Vector> gram_matrix(const Functional& lambda, const Subspace& s, const Subspace& t);

// {X in S : lambda(XY) = 0 for all Y in T}.
Subspace left_kernel(const Functional& lambda, const Subspace& s, const Subspace& t);

struct QuasiMonomialKernels {
  std::set<Position> perp_l;  // X_ij = 0 on l^1
  std::set<Position> perp_s;  // X_ij = 0 on s^1
  Subspace l1;
  Subspace s1;
  // lambda G = lambda + span{e*_ij : (i,j) in perp_l}.
  std::vector<Position> right_orbit_directions;
};

// Combinatorial first chain step of a quasi-monomial functional on a pattern algebra.
QuasiMonomialKernels quasimonomial_kernels(const Functional& lambda);

struct IrreducibilityReport {
  bool l_bar_equals_s_bar = false;
  Subspace common;
  ChainResult chain;
};

// Whether l_bar = s_bar for a quasi-monomial functional.
IrreducibilityReport quasimonomial_irreducibility_check(const Functional& lambda);

// Affine membership test: mu in lambda + span{e*_ij : (i,j) in directions}.
bool in_affine_orbit(const Functional& lambda, const std::vector<Position>& directions, const Functional& mu);

}  // namespace unitri
