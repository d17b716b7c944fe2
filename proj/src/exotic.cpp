#include "unitri/exotic.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace unitri {

namespace {

void require_r(int r) {
  if (r < 2) throw std::invalid_argument("exotic: r must be at least 2");
}

int resolve_n(int r, int n) {
  const int base = 6 * r + 1;
  if (n == 0) return base;
  if (n < base) throw std::invalid_argument("exotic: n must be at least 6r+1 = " + std::to_string(base));
  return n;
}

std::vector<Position> sorted_union(std::initializer_list<const std::vector<Position>*> parts) {
  std::set<Position> s;
  for (const auto* p : parts) s.insert(p->begin(), p->end());
  return {s.begin(), s.end()};
}

std::vector<Position> minus(const std::vector<Position>& a, const std::vector<Position>& b) {
  std::vector<Position> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) v *= b;
  return v;
}

}  // namespace

const std::vector<Position>& RegionAtlas::region(const std::string& name) const {
  const auto it = regions.find(name);
  if (it == regions.end()) throw std::invalid_argument("unknown region '" + name + "'");
  return it->second;
}

const std::vector<std::string>& RegionAtlas::base_names() {
  static const std::vector<std::string> names = {"A",  "B",  "C",  "D",  "A'", "B'", "C'",
                                                 "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7"};
  return names;
}

std::vector<Position> box_region(int m, int x, int y) {
  std::vector<Position> out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out.push_back({x + i, y + j});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> lower_triangle(int m, int x, int y) {
  std::vector<Position> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.push_back({x + j, y + i});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> upper_triangle(int m, int x, int y) {
  std::vector<Position> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.push_back({x + i, y + j});
  std::sort(out.begin(), out.end());
  return out;
}

RegionAtlas build_regions(int r) {
  require_r(r);
  RegionAtlas atlas;
  atlas.r = r;
  atlas.n = 6 * r + 1;
  auto& reg = atlas.regions;
  reg["A"] = lower_triangle(r, r, 3 * r + 1);
  reg["B"] = upper_triangle(r, r, r);
  reg["C"] = lower_triangle(r, 0, r);
  reg["A'"] = lower_triangle(r, 2 * r + 1, 3 * r + 1);
  reg["B'"] = upper_triangle(r, 2 * r + 1, 2 * r + 1);
  {
    auto c2 = lower_triangle(r - 1, 1, 2 * r + 1);
    for (int i = 2; i <= r; ++i) c2.push_back({2 * r + 1, 2 * r + i});
    std::sort(c2.begin(), c2.end());
    reg["C'"] = c2;
  }
  {
    auto d = upper_triangle(r, 0, 0);
    for (int i = 2; i <= r; ++i) d.push_back({i, 2 * r + 1});
    std::sort(d.begin(), d.end());
    reg["D"] = d;
  }
  {
    // The extra column sits at rows r+1..2r; rows 2r+1..3r would hit lambda' itself.
    auto z1 = box_region(r, r, 2 * r);
    for (int i = 1; i <= r; ++i) z1.push_back({r + i, 3 * r + 1});
    std::sort(z1.begin(), z1.end());
    reg["Z1"] = z1;
  }
  reg["Z2"] = lower_triangle(r, r, 4 * r + 1);
  reg["Z3"] = box_region(r, 3 * r + 1, 4 * r + 1);
  reg["Z4"] = lower_triangle(r, 3 * r + 1, 5 * r + 1);
  reg["Z5"] = minus(box_region(r, 0, r), reg["C"]);
  reg["Z6"] = minus(box_region(r, r, 3 * r + 1), reg["A"]);
  reg["Z7"] = upper_triangle(r, 3 * r + 1, 3 * r + 1);
  reg["Z"] = sorted_union({&reg["Z1"], &reg["Z2"], &reg["Z3"], &reg["Z4"]});
  reg["Z'"] = sorted_union({&reg["Z5"], &reg["Z6"], &reg["Z7"]});

  for (const auto& [i, j] : reg["A"]) atlas.tau[{i, j}] = {i + r + 1, j};
  for (const auto& [i, j] : reg["B"]) atlas.tau[{i, j}] = {i + r + 1, j + r + 1};
  for (const auto& [i, j] : reg["C"]) atlas.tau[{i, j}] = i < r ? Position{i + 1, j + r + 1} : Position{2 * r + 1, j + r + 1};
  for (const auto& [i, j] : reg["D"]) {
    if (j < r) atlas.tau[{i, j}] = {i + 1, j + 1};
    else if (j == r) atlas.tau[{i, j}] = {i + 1, 2 * r + 1};
    else atlas.tau[{i, j}] = {1, r + 2 - i};
  }
  return atlas;
}

AtlasCheck check_atlas(const RegionAtlas& atlas) {
  AtlasCheck out;
  const int r = atlas.r;
  const int n = atlas.n;
  std::set<Position> seen;
  out.disjoint = true;
  for (const auto& name : RegionAtlas::base_names()) {
    for (const auto& pos : atlas.region(name)) {
      if (pos.i < 1 || pos.i >= pos.j || pos.j > n) out.problems.push_back(name + " has invalid position " + to_string(pos));
      if (!seen.insert(pos).second) out.disjoint = false;
    }
  }
  auto image = [&](const std::string& name) {
    std::vector<Position> img;
    for (const auto& pos : atlas.region(name)) img.push_back(atlas.tau.at(pos));
    std::sort(img.begin(), img.end());
    return img;
  };
  out.tau_images = image("A") == atlas.region("A'") && image("B") == atlas.region("B'") &&
                   image("C") == atlas.region("C'") && image("D") == atlas.region("D");
  std::set<Position> values;
  for (const auto& [k, v] : atlas.tau) values.insert(v);
  out.tau_injective = values.size() == atlas.tau.size();

  const std::size_t tri = static_cast<std::size_t>(r * r - r) / 2;
  const auto sz = [&](const char* name) { return atlas.region(name).size(); };
  out.cardinalities = sz("A") == tri && sz("B") == tri && sz("C") == tri && sz("A'") == tri && sz("B'") == tri &&
                      sz("C'") == tri && sz("D") == static_cast<std::size_t>(r * r + r) / 2 - 1 &&
                      sz("Z") == static_cast<std::size_t>(3 * r * r) &&
                      sz("Z1") == static_cast<std::size_t>(r * r + r) && sz("Z3") == static_cast<std::size_t>(r * r) &&
                      sz("Z2") == tri && sz("Z4") == tri;

  // Cycles of tau on D.
  std::set<Position> visited;
  for (const auto& start : atlas.region("D")) {
    if (visited.count(start)) continue;
    ++out.d_orbit_count;
    Position cur = start;
    for (std::size_t guard = 0; guard <= atlas.region("D").size(); ++guard) {
      visited.insert(cur);
      cur = atlas.tau.at(cur);
      if (cur == start) break;
    }
    if (cur != start) out.problems.push_back("tau on D is not a permutation");
  }
  if (out.d_orbit_count != r - 1)
    out.problems.push_back("tau has " + std::to_string(out.d_orbit_count) + " cycles on D, expected " +
                           std::to_string(r - 1));
  return out;
}

std::vector<Entry> sigma_entries(int m, int i, int j, FieldElement c) {
  std::vector<Entry> out;
  for (int k = 1; k <= m; ++k) out.push_back({{i + k, j + k}, c});
  return out;
}

Functional build_lambda_prime(int r, const Field& field, int n) {
  require_r(r);
  n = resolve_n(r, n);
  std::vector<Entry> e;
  const FieldElement one = field.one();
  for (const auto& part : {sigma_entries(r, 0, 2 * r, one), sigma_entries(r, r, 4 * r + 1, one),
                           sigma_entries(r, 3 * r + 1, 5 * r + 1, one), sigma_entries(r + 1, 2 * r, 3 * r, one)})
    e.insert(e.end(), part.begin(), part.end());
  return Functional::from_entries(Algebra::full(n, field), e);
}

Functional build_lambda(int r, const Field& field, int n) {
  const Functional prime = build_lambda_prime(r, field, n);
  std::vector<Entry> e;
  const FieldElement one = field.one();
  for (const auto& part : {sigma_entries(r, 0, r, one), sigma_entries(r, r, 3 * r + 1, one)})
    e.insert(e.end(), part.begin(), part.end());
  return prime - Functional::from_entries(prime.algebra(), e);
}

Subspace tied_subspace(const RegionAtlas& atlas, const Field& field, const std::vector<std::string>& tie_regions,
                       const std::vector<std::string>& zero_regions) {
  const int n = atlas.n;
  const std::size_t dim = triangle_size(n);
  UnionFind uf(dim);
  for (const auto& name : tie_regions)
    for (const auto& pos : atlas.region(name)) uf.unite(coordinate_of(n, pos), coordinate_of(n, atlas.tau.at(pos)));
  std::vector<char> zero(dim, 0);
  for (const auto& name : zero_regions)
    for (const auto& pos : atlas.region(name)) zero[coordinate_of(n, pos)] = 1;
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t c = 0; c < dim; ++c) classes[uf.find(c)].push_back(c);
  std::vector<Vector> gens;
  for (const auto& [root, members] : classes) {
    if (std::any_of(members.begin(), members.end(), [&](std::size_t c) { return zero[c] != 0; })) continue;
    Vector v(dim, field.zero());
    for (const std::size_t c : members) v[c] = field.one();
    gens.push_back(std::move(v));
  }
  return Subspace::span(field, dim, std::move(gens));
}

ClosedFormChain closed_form_chain(const RegionAtlas& atlas, const Field& field) {
  ClosedFormChain c;
  c.l1 = tied_subspace(atlas, field, {}, {"A", "A'", "B", "B'", "C", "C'", "D", "Z", "Z'"});
  c.l2 = tied_subspace(atlas, field, {"A"}, {"B", "B'", "C", "C'", "D", "Z"});
  c.l3 = tied_subspace(atlas, field, {"A", "B", "C"}, {"D", "Z"});
  c.s1 = tied_subspace(atlas, field, {}, {"Z"});
  c.s2 = tied_subspace(atlas, field, {"A", "B"}, {"Z"});
  c.s3 = tied_subspace(atlas, field, {"A", "B", "C", "D"}, {"Z"});
  return c;
}

bool TechnicalReport::subspaces_match() const {
  return !comparisons.empty() &&
         std::all_of(comparisons.begin(), comparisons.end(), [](const SubspaceComparison& c) { return c.equal; });
}

bool TechnicalReport::passed() const {
  return atlas.ok() && subspaces_match() && kernels_match && lambda_in_right_orbit && bilinear_failures == 0 &&
         dimension_identities;
}

TechnicalReport verify_technical(int r, const Field& field) {
  require_r(r);
  TechnicalReport rep;
  rep.r = r;
  rep.n = 6 * r + 1;
  rep.field = field;
  const RegionAtlas atlas = build_regions(r);
  rep.atlas = check_atlas(atlas);

  const Functional lambda = build_lambda(r, field);
  const Functional prime = build_lambda_prime(r, field);
  rep.chain = chain_compute(lambda);
  const ClosedFormChain cf = closed_form_chain(atlas, field);

  auto compare = [&](const std::string& name, const Subspace& expected, const Subspace* computed) {
    SubspaceComparison c;
    c.name = name;
    c.expected_dim = expected.dim();
    if (computed) {
      c.computed_dim = computed->dim();
      c.equal = *computed == expected;
    }
    rep.comparisons.push_back(c);
  };
  auto level = [&](const std::vector<Subspace>& list, std::size_t i) { return i < list.size() ? &list[i] : nullptr; };
  compare("l1", cf.l1, level(rep.chain.l_list, 1));
  compare("l2", cf.l2, level(rep.chain.l_list, 2));
  compare("l3", cf.l3, level(rep.chain.l_list, 3));
  compare("s1", cf.s1, level(rep.chain.s_list, 1));
  compare("s2", cf.s2, level(rep.chain.s_list, 2));
  compare("s3", cf.s3, level(rep.chain.s_list, 3));
  compare("l_bar", cf.l3, &rep.chain.l_bar);
  compare("s_bar", cf.s3, &rep.chain.s_bar);

  const QuasiMonomialKernels k = quasimonomial_kernels(prime);
  std::set<Position> lettered;
  for (const auto& name : {"A", "A'", "B", "B'", "C", "C'", "D", "Z", "Z'"})
    lettered.insert(atlas.region(name).begin(), atlas.region(name).end());
  const std::set<Position> z(atlas.region("Z").begin(), atlas.region("Z").end());
  rep.kernels_match = k.perp_l == lettered && k.perp_s == z;
  rep.lambda_in_right_orbit = in_affine_orbit(prime, k.right_orbit_directions, lambda);

  const Functional nu =
      lambda - Functional::from_entries(lambda.algebra(), {{{1, 2 * r + 1}, field.one()}});
  for (const auto& row : gram_matrix(nu, rep.chain.s_bar, rep.chain.s_bar))
    rep.bilinear_failures += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](FieldElement x) { return x.rep != 0; }));

  const std::size_t rr = static_cast<std::size_t>(r);
  const std::size_t dim_n = triangle_size(rep.n);
  const std::size_t s = rep.chain.s_bar.dim();
  const std::size_t l = rep.chain.l_bar.dim();
  rep.dimension_identities = s == 13 * rr * rr + 5 * rr && l + (rr - 1) == s &&
                             dim_n - l == 5 * rr * rr - rr - 1 && dim_n - s == 5 * rr * rr - 2 * rr;
  return rep;
}

bool ASubalgebraReport::passed() const {
  return a_is_subalgebra && a_in_s_bar && direct_sum && h_two_sided && h_in_ker_mu && iso_bijective &&
         iso_respects_products && mu_matches_kappa && nu_left_invariant && nu_right_invariant &&
         projection_homomorphism;
}

NilMatrix a_to_toeplitz(const NilMatrix& x, int r) {
  if (x.n() < 2 * r + 1) throw std::invalid_argument("a_to_toeplitz: matrix too small");
  NilMatrix y(x.field(), r + 1);
  for (int i = 1; i <= r + 1; ++i)
    for (int j = i + 1; j <= r + 1; ++j) y.set(i, j, j <= r ? x(i, j) : x(i, 2 * r + 1));
  return y;
}

ASubalgebraReport a_subalgebra(int r, const Field& field, const ChainResult& chain) {
  require_r(r);
  ASubalgebraReport rep;
  rep.r = r;
  const RegionAtlas atlas = build_regions(r);
  const int n = atlas.n;
  const std::size_t dim = triangle_size(n);
  const std::size_t corner = coordinate_of(n, {1, 2 * r + 1});

  // a: tau-orbit sums on D, plus e_{1,2r+1}.
  std::vector<Vector> gens = tied_subspace(atlas, field, {"D"}, {}).basis();
  {
    // Keep only the D classes: tied_subspace above also returns all free coordinates.
    std::set<std::size_t> dcoords;
    for (const auto& pos : atlas.region("D")) dcoords.insert(coordinate_of(n, pos));
    std::vector<Vector> kept;
    for (auto& v : gens) {
      bool in_d = false;
      for (std::size_t c = 0; c < dim && !in_d; ++c) in_d = v[c].rep != 0 && dcoords.count(c);
      if (in_d) kept.push_back(std::move(v));
    }
    gens = std::move(kept);
  }
  {
    Vector e(dim, field.zero());
    e[corner] = field.one();
    gens.push_back(std::move(e));
  }
  const Subspace a_space = Subspace::span(field, dim, gens);
  rep.a_dim = a_space.dim();
  rep.a_in_s_bar = a_space.is_subspace_of(chain.s_bar);

  std::vector<std::size_t> off_corner;
  for (std::size_t c = 0; c < dim; ++c)
    if (c != corner) off_corner.push_back(c);
  const Subspace h = chain.l_bar.intersection(Subspace::coordinate(field, dim, off_corner));
  rep.h_dim = h.dim();
  rep.direct_sum = rep.a_dim + rep.h_dim == chain.s_bar.dim() && a_space.intersection(h).dim() == 0;
  rep.h_in_ker_mu = std::all_of(h.basis().begin(), h.basis().end(), [&](const Vector& v) { return v[corner].rep == 0; });

  std::optional<Algebra> a_alg;
  try {
    a_alg = Algebra::from_subspace(n, field, a_space);
    rep.a_is_subalgebra = true;
  } catch (const std::invalid_argument&) {
    return rep;
  }
  const Algebra sbar = Algebra::from_subspace(n, field, chain.s_bar);
  rep.h_two_sided = ideal_check(h, sbar).two_sided();

  const Algebra target = Algebra::toeplitz(r + 1, field);
  std::vector<NilMatrix> images;
  bool in_target = true;
  for (const auto& x : a_alg->basis()) {
    images.push_back(a_to_toeplitz(x, r));
    in_target = in_target && target.contains(images.back());
  }
  {
    std::vector<Vector> rows;
    for (const auto& y : images) rows.push_back(y.to_vector());
    rep.iso_bijective = in_target && Subspace::span(field, triangle_size(r + 1), rows).dim() == target.dim() &&
                        images.size() == target.dim();
  }
  rep.iso_respects_products = true;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = 0; b < images.size(); ++b)
      if (!(a_to_toeplitz(a_alg->basis()[a] * a_alg->basis()[b], r) == images[a] * images[b]))
        rep.iso_respects_products = false;
  rep.mu_matches_kappa = true;
  for (std::size_t a = 0; a < images.size(); ++a)
    if (a_alg->basis()[a](1, 2 * r + 1) != images[a](1, r + 1)) rep.mu_matches_kappa = false;

  const Functional lambda = build_lambda(r, field);
  std::vector<Entry> nu_entries = lambda.entries();
  nu_entries.push_back({{1, 2 * r + 1}, field.neg(field.one())});
  const Functional nu = Functional::from_entries(sbar, nu_entries);
  rep.nu_left_invariant = rep.nu_right_invariant = true;
  for (const auto& body : sbar.generators()) {
    const GroupElement g{body};
    if (!(act_left(g, nu) == nu)) rep.nu_left_invariant = false;
    if (!(act_right(nu, g) == nu)) rep.nu_right_invariant = false;
  }

  try {
    const QuotientProjection pi(sbar, *a_alg, h);
    rep.projection_homomorphism = true;
    const auto& sg = sbar.generators();
    const std::size_t limit = std::min<std::size_t>(sg.size(), 24);
    for (std::size_t i = 0; i < limit && rep.projection_homomorphism; ++i)
      for (std::size_t j = 0; j < limit; ++j) {
        const GroupElement g{sg[i]}, k{sg[j]};
        if (!(pi.project(group_mul(g, k)) == group_mul(pi.project(g), pi.project(k)))) {
          rep.projection_homomorphism = false;
          break;
        }
      }
  } catch (const std::invalid_argument&) {
    rep.projection_homomorphism = false;
  }
  return rep;
}

bool KappaReport::consistent() const {
  const int p = field.p();
  bool ok = max_element_order == expected_max_order && lbar_is_corner && sbar_is_whole && chi_matches_formula &&
            constituent_count == expected_constituent_count && constituents_distinct && constituents_sum_to_chi &&
            max_value_order == expected_max_order && some_constituent_has_all_roots &&
            psi.is_character == (n == 2) && psi_exp.is_character == (n <= p);
  if (exp_witness) ok = ok && exp_witness->verified;
  return ok;
}

KappaReport kappa_analysis(int n, const Field& field, std::uint64_t cap) {
  if (n < 2) throw std::invalid_argument("kappa: n must be at least 2");
  KappaReport rep;
  rep.n = n;
  rep.field = field;
  const int p = field.p();
  const std::uint32_t q = field.q();
  const Algebra a = Algebra::toeplitz(n, field);
  rep.group_order = a.order(cap);
  const Functional kappa = Functional::from_entries(a, {{{1, n}, field.one()}});

  long long pw = 1;
  while (pw * p < n) pw *= p;
  rep.expected_max_order = pw * p;
  for_each_element(a, [&](std::uint64_t, const GroupElement& g) {
    rep.max_element_order = std::max(rep.max_element_order, group_order_of(g));
  }, cap);

  const std::size_t dim = triangle_size(n);
  const std::size_t corner = coordinate_of(n, {1, n});
  const Subspace corner_space = Subspace::coordinate(field, dim, {corner});
  const ChainResult chain = chain_compute(kappa);
  rep.lbar_is_corner = chain.l_bar == corner_space;
  rep.sbar_is_whole = chain.s_bar == a.space();

  const ClassFunction chi = supercharacter(kappa, cap);
  {
    const Rational scale = [&] {
      mpz_class v = 1;
      for (int i = 0; i < n - 2; ++i) v *= q;
      return Rational(v);
    }();
    const ClassFunction formula = ClassFunction::from_function(
        a,
        [&](const GroupElement& g) {
          for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
              if (!(i == 1 && j == n) && g.body(i, j).rep != 0) return CyclotomicNumber::rational(0);
          return additive_character(field, g.body(1, n)) * scale;
        },
        cap);
    rep.chi_matches_formula = formula == chi;
  }

  const AbelianDual dual = abelian_dual(a, cap);
  const Algebra corner_alg = Algebra::from_subspace(n, field, corner_space);
  const ClassFunction theta_l = theta_lambda(Functional::from_entries(corner_alg, kappa.entries()), cap);
  const std::vector<ClassFunction> constituents = constituents_of_induced_linear(dual, corner_alg, theta_l);
  rep.constituent_count = constituents.size();
  rep.expected_constituent_count = ipow(q, static_cast<std::size_t>(n - 2));
  rep.constituents_distinct = true;
  for (std::size_t i = 0; i < constituents.size() && rep.constituents_distinct; ++i)
    for (std::size_t j = i + 1; j < constituents.size(); ++j)
      if (constituents[i] == constituents[j]) {
        rep.constituents_distinct = false;
        break;
      }
  if (!constituents.empty()) {
    ClassFunction sum = constituents.front();
    for (std::size_t i = 1; i < constituents.size(); ++i) sum = sum + constituents[i];
    rep.constituents_sum_to_chi = sum == chi;
  }
  for (const auto& c : constituents) {
    rep.constituent_fields.push_back(field_of_values(c));
    const auto& vf = rep.constituent_fields.back();
    if (vf.value_order) {
      rep.max_value_order = std::max(rep.max_value_order, *vf.value_order);
      if (*vf.value_order == rep.expected_max_order) rep.some_constituent_has_all_roots = true;
    }
  }

  const ClassFunction psi = kirillov(kappa, cap);
  const ClassFunction psi_exp = exp_kirillov(kappa, cap);
  rep.psi = is_character_linear(psi);
  rep.psi_exp = is_character_linear(psi_exp);

  if (n > p) {
    NilMatrix x(field, n);
    for (int i = 1; i < n; ++i) x.set(i, i + 1, field.one());
    ExpWitness w;
    std::ostringstream detail;
    if (n == p + 1) {
      w.kind = "x^{n-1} = z";
      const GroupElement ex = trunc_exp(x);
      const GroupElement z{x.power(n - 1)};
      CyclotomicNumber pow = CyclotomicNumber::rational(1);
      for (int i = 0; i < n - 1; ++i) pow *= psi_exp(ex);
      w.verified = group_pow(ex, n - 1) == z && !(pow == psi_exp(z));
      detail << "psiExp(x)^" << n - 1 << " = " << pow.to_string() << ", psiExp(z) = " << psi_exp(z).to_string();
    } else {
      w.kind = "Exp(X^{n-p}) Exp(X)";
      const GroupElement ea = trunc_exp(x.power(n - p));
      const GroupElement eb = trunc_exp(x);
      const CyclotomicNumber one = CyclotomicNumber::rational(1);
      const CyclotomicNumber minus_one_theta = additive_character(field, field.neg(field.one()));
      const CyclotomicNumber vab = psi_exp(group_mul(ea, eb));
      w.verified = psi_exp(ea) == one && psi_exp(eb) == one && vab == minus_one_theta && !(vab == one);
      detail << "psiExp(a) = " << psi_exp(ea).to_string() << ", psiExp(b) = " << psi_exp(eb).to_string()
             << ", psiExp(ab) = " << vab.to_string();
    }
    w.detail = detail.str();
    rep.exp_witness = w;
  }
  return rep;
}

SetPartition theorem_shape(int r, int n) { return shape(build_lambda_prime(r, Field::make(2), n)); }

namespace {

// The families as listed in the statement: {1,2r+1,3r+1,4r+1,6r+1}, {i,2r+i,3r+i,5r+i}
// (1 < i <= r), {i,4r+1+i} (r+1 <= i <= 2r), and singletons above 6r+1.
std::vector<std::vector<int>> listed_shape(int r, int n) {
  std::vector<std::vector<int>> parts;
  parts.push_back({1, 2 * r + 1, 3 * r + 1, 4 * r + 1, 6 * r + 1});
  for (int i = 2; i <= r; ++i) parts.push_back({i, 2 * r + i, 3 * r + i, 5 * r + i});
  for (int i = r + 1; i <= 2 * r; ++i) parts.push_back({i, 4 * r + 1 + i});
  for (int i = 6 * r + 2; i <= n; ++i) parts.push_back({i});
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

ExoticReport exotic_report(int r, const Field& field, int n, std::uint64_t cap) {
  require_r(r);
  n = resolve_n(r, n);
  ExoticReport rep;
  rep.r = r;
  rep.q = field.q();
  rep.n = n;
  rep.technical = verify_technical(r, field);
  const ChainResult& chain = rep.technical.chain;
  rep.a_report = a_subalgebra(r, field, chain);
  rep.kappa = kappa_analysis(r + 1, field, cap);

  // Zero columns beyond 6r+1 form an ideal h with l_bar(n) = l_bar(6r+1) + h, so the
  // codimensions below do not depend on n.
  const std::size_t dim_n = triangle_size(6 * r + 1);
  rep.s_bar_dim = chain.s_bar.dim();
  rep.l_bar_dim = chain.l_bar.dim();
  rep.xi_degree_exponent = dim_n - rep.l_bar_dim;
  rep.xi_norm_exponent = rep.s_bar_dim - rep.l_bar_dim;
  rep.constituent_degree_exponent = dim_n - rep.s_bar_dim;
  rep.kirillov_degree_exponent = rep.constituent_degree_exponent;
  rep.constituent_count = rep.kappa.constituent_count;
  rep.constituent_count_exponent = static_cast<std::size_t>(r - 1);
  rep.xi_orbit_exponent = 2 * dim_n - rep.l_bar_dim - rep.s_bar_dim;
  rep.xi_orbit_consistent = rep.xi_orbit_exponent == 2 * rep.constituent_degree_exponent + static_cast<std::size_t>(r - 1) &&
                            rep.constituent_count == ipow(rep.q, rep.xi_norm_exponent);
  rep.value_field_conductor = rep.kappa.max_value_order;

  const int p = field.p();
  int i = 0;
  for (long long pw = p; pw <= r; pw *= p) ++i;
  rep.outside_subfield_index = i;
  for (const auto& vf : rep.kappa.constituent_fields)
    if (vf.min_subfield_index > i) rep.some_constituent_outside = true;
  rep.kirillov_is_character = rep.kappa.psi.is_character;
  rep.exp_kirillov_is_character = rep.kappa.psi_exp.is_character;
  rep.shape = theorem_shape(r, n);

  rep.provenance = {
      {"xi_degree_exponent", "computed: chain dimensions"},
      {"xi_norm_exponent", "computed: chain dimensions"},
      {"constituent_degree_exponent", "computed: index of S_bar"},
      {"constituent_count", "lifted: constituents of chi_kappa on A_{r+1}(q)"},
      {"value_field_conductor", "lifted: constituent values on A_{r+1}(q) through the Galois rule"},
      {"kirillov_is_character", "lifted: homomorphism test of psi_kappa on A_{r+1}(q)"},
      {"exp_kirillov_is_character", "lifted: homomorphism test of psiExp_kappa on A_{r+1}(q)"},
      {"shape", "computed: components of lambda'"},
  };
  if (n > 6 * r + 1) rep.provenance["padding"] = "inflation from u_{6r+1} along the zero-column ideal";

  const auto listed = listed_shape(r, n);
  std::set<int> covered;
  bool disjoint = true;
  for (const auto& part : listed)
    for (int v : part)
      if (!covered.insert(v).second) disjoint = false;
  if (listed != rep.shape.parts) {
    std::ostringstream os;
    os << "listed family {i, 4r+1+i} for r+1 <= i <= 2r gives "
       << (disjoint ? "a different partition" : "overlapping sets") << "; computed shape " << rep.shape.to_string();
    rep.discrepancies["shape_third_family"] = os.str();
  }
  {
    const long long rr = r;
    std::ostringstream os;
    os << "listed exponent 5p^2-p (= " << 5 * rr * rr - rr << " at p = r), computed 5r^2-2r = "
       << rep.kirillov_degree_exponent;
    rep.discrepancies["exp_kirillov_degree"] = os.str();
  }
  return rep;
}

std::vector<Functional> torus_orbit(const Functional& lambda, std::uint64_t cap) {
  const Algebra& alg = lambda.algebra();
  const Field& f = alg.field();
  const int n = alg.n();
  std::vector<std::vector<FieldElement>> gens;
  if (f.q() > 2) {
    for (int k = 0; k < n; ++k) {
      std::vector<FieldElement> d(static_cast<std::size_t>(n), f.one());
      d[static_cast<std::size_t>(k)] = f.primitive_element();
      gens.push_back(std::move(d));
    }
  }
  std::unordered_set<Functional, FunctionalHash> seen{lambda};
  std::deque<Functional> queue{lambda};
  while (!queue.empty()) {
    const Functional mu = queue.front();
    queue.pop_front();
    for (const auto& d : gens) {
      Functional nu = torus_act(d, mu);
      if (seen.insert(nu).second) {
        if (seen.size() > cap) throw CapExceeded("torus orbit exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(nu));
      }
    }
  }
  std::vector<Functional> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

TorusReport torus_check(const Functional& lambda, std::uint64_t cap) {
  if (!is_quasi_monomial(lambda)) throw std::invalid_argument("torus check: functional is not quasi-monomial");
  TorusReport rep;
  const SetPartition base = shape(lambda);
  rep.parts = base.size();
  const auto orb = torus_orbit(lambda, cap);
  rep.orbit_size = orb.size();
  rep.expected = ipow(lambda.algebra().field().q() - 1, static_cast<std::size_t>(lambda.algebra().n()) - rep.parts);
  rep.shape_preserved = std::all_of(orb.begin(), orb.end(), [&](const Functional& mu) { return shape(mu) == base; });
  return rep;
}

TorusReport torus_transitivity_check(int r, const Field& field, std::uint64_t cap) {
  return torus_check(build_lambda_prime(r, field), cap);
}

}  // namespace unitri
