#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unitri/characters.hpp"

namespace unitri {

// Positions of u_{6r+1} used to describe the chain of the exotic functional.
// Region names: A B C D A' B' C' Z1 .. Z7, plus the unions Z and Z'.
struct RegionAtlas {
  int r = 2;
  int n = 13;
  std::map<std::string, std::vector<Position>> regions;  // each sorted
  std::map<Position, Position> tau;                      // on A, B, C, D

  const std::vector<Position>& region(const std::string& name) const;
  static const std::vector<std::string>& base_names();  // the fourteen disjoint regions
};

// box(m;x,y) = {(x+i, y+j)}, lower(m;x,y) = {(x+j, y+i) : i<j}, upper(m;x,y) = {(x+i, y+j) : i<j},
// with i, j in [m].
std::vector<Position> box_region(int m, int x, int y);
std::vector<Position> lower_triangle(int m, int x, int y);
std::vector<Position> upper_triangle(int m, int x, int y);

RegionAtlas build_regions(int r);

struct AtlasCheck {
  bool disjoint = false;
  bool tau_images = false;     // tau(A) = A', tau(B) = B', tau(C) = C', tau(D) = D
  bool tau_injective = false;
  bool cardinalities = false;
  int d_orbit_count = 0;       // cycles of tau on D
  std::vector<std::string> problems;
  bool ok() const { return disjoint && tau_images && tau_injective && cardinalities && problems.empty(); }
};
AtlasCheck check_atlas(const RegionAtlas& atlas);

// sum_{k=1..m} e*_{i+k, j+k} as entries with value c.
std::vector<Entry> sigma_entries(int m, int i, int j, FieldElement c);

// lambda' = s(r;0,2r) + s(r;r,4r+1) + s(r;3r+1,5r+1) + s(r+1;2r,3r), on u_n with n >= 6r+1.
Functional build_lambda_prime(int r, const Field& field, int n = 0);
// lambda = lambda' - s(r;0,r) - s(r;r,3r+1).
Functional build_lambda(int r, const Field& field, int n = 0);

// {X : X_a = X_tau(a) for a in tie_regions, X_a = 0 for a in zero_regions}.
Subspace tied_subspace(const RegionAtlas& atlas, const Field& field, const std::vector<std::string>& tie_regions,
                       const std::vector<std::string>& zero_regions);

struct ClosedFormChain {
  Subspace l1, l2, l3, s1, s2, s3;
};
ClosedFormChain closed_form_chain(const RegionAtlas& atlas, const Field& field);

struct SubspaceComparison {
  std::string name;
  bool equal = false;
  std::size_t expected_dim = 0;
  std::size_t computed_dim = 0;
};

struct TechnicalReport {
  int r = 0;
  int n = 0;
  Field field;
  AtlasCheck atlas;
  ChainResult chain;
  std::vector<SubspaceComparison> comparisons;  // l1 l2 l3 s1 s2 s3 l_bar s_bar
  bool kernels_match = false;      // perp sets of lambda' are the lettered regions and Z
  bool lambda_in_right_orbit = false;
  std::size_t bilinear_failures = 0;  // basis pairs of s_bar with (lambda - e*_{1,2r+1})(XY) != 0
  bool dimension_identities = false;

  bool subspaces_match() const;
  bool passed() const;
};

TechnicalReport verify_technical(int r, const Field& field);

// The n = a + h decomposition of s_bar and the map a -> a_{r+1}(q).
struct ASubalgebraReport {
  int r = 0;
  std::size_t a_dim = 0;
  std::size_t h_dim = 0;
  bool a_is_subalgebra = false;
  bool a_in_s_bar = false;
  bool direct_sum = false;
  bool h_two_sided = false;
  bool h_in_ker_mu = false;
  bool iso_bijective = false;
  bool iso_respects_products = false;
  bool mu_matches_kappa = false;
  bool nu_left_invariant = false;
  bool nu_right_invariant = false;
  bool projection_homomorphism = false;  // on generator pairs of S_bar

  bool passed() const;
};

// Y_ij = X_ij (j <= r), Y_{i,r+1} = X_{i,2r+1}.
NilMatrix a_to_toeplitz(const NilMatrix& x, int r);

ASubalgebraReport a_subalgebra(int r, const Field& field, const ChainResult& chain);

struct ExpWitness {
  std::string kind;  // "x^{n-1} = z" or "Exp(X^{n-p}) Exp(X)"
  bool verified = false;
  std::string detail;
};

struct KappaReport {
  int n = 0;
  Field field;
  std::uint64_t group_order = 0;
  long long max_element_order = 0;
  long long expected_max_order = 0;   // p times the largest power of p below n
  bool lbar_is_corner = false;
  bool sbar_is_whole = false;
  bool chi_matches_formula = false;
  std::size_t constituent_count = 0;
  std::uint64_t expected_constituent_count = 0;
  bool constituents_distinct = false;
  bool constituents_sum_to_chi = false;
  std::vector<ValueField> constituent_fields;
  long long max_value_order = 0;      // largest order of a constituent's value group
  bool some_constituent_has_all_roots = false;
  LinearityReport psi;
  LinearityReport psi_exp;
  std::optional<ExpWitness> exp_witness;

  bool consistent() const;  // every claim above agrees with its prediction
};

KappaReport kappa_analysis(int n, const Field& field, std::uint64_t cap = kDefaultCap);

struct ExoticReport {
  int r = 0;
  std::uint32_t q = 0;
  int n = 0;
  std::size_t xi_degree_exponent = 0;
  std::size_t xi_norm_exponent = 0;
  std::uint64_t constituent_count = 0;
  std::size_t constituent_count_exponent = 0;
  std::size_t constituent_degree_exponent = 0;
  long long value_field_conductor = 0;
  int outside_subfield_index = 0;          // i with p^i the largest power of p at most r
  bool some_constituent_outside = false;   // values outside Q(zeta_{p^i})
  bool kirillov_is_character = false;
  bool exp_kirillov_is_character = false;
  std::size_t kirillov_degree_exponent = 0;
  std::size_t xi_orbit_exponent = 0;       // log_q |Xi_lambda| from the chain
  bool xi_orbit_consistent = false;
  std::size_t s_bar_dim = 0;
  std::size_t l_bar_dim = 0;
  SetPartition shape;
  // Which fields come from direct computation and which are lifted from A_{r+1}(q).
  std::map<std::string, std::string> provenance;
  // Literal statements that disagree with the computation.
  std::map<std::string, std::string> discrepancies;

  TechnicalReport technical;
  ASubalgebraReport a_report;
  KappaReport kappa;

  bool prerequisites_passed() const { return technical.passed() && a_report.passed() && kappa.consistent(); }
};

// n = 0 means 6r+1; larger n pads by zero columns.
ExoticReport exotic_report(int r, const Field& field, int n = 0, std::uint64_t cap = kDefaultCap);

// Shape of lambda' on u_n.
SetPartition theorem_shape(int r, int n);

// Orbit of a quasi-monomial functional under X -> D X D^{-1}, D diagonal.
std::vector<Functional> torus_orbit(const Functional& lambda, std::uint64_t cap = kDefaultCap);

struct TorusReport {
  std::uint64_t orbit_size = 0;
  std::uint64_t expected = 0;          // (q-1)^{n - parts}
  std::size_t parts = 0;
  bool shape_preserved = false;
  bool passed() const { return orbit_size == expected && shape_preserved; }
};

TorusReport torus_check(const Functional& lambda, std::uint64_t cap = kDefaultCap);
TorusReport torus_transitivity_check(int r, const Field& field, std::uint64_t cap = kDefaultCap);

}  // namespace unitri
