#include <doctest.h>

#include <map>
#include <random>

#include "oracle.hpp"
#include "unitri/algebra.hpp"

using namespace unitri;

TEST_SUITE("algebra") {

TEST_CASE("position coordinates") {
  CHECK(triangle_size(1) == 0);
  CHECK(triangle_size(6) == 15);
  CHECK(triangle_size(13) == 78);
  for (int n : {2, 5, 9})
    for (std::size_t c = 0; c < triangle_size(n); ++c) CHECK(coordinate_of(n, position_of(n, c)) == c);
  CHECK(coordinate_of(4, {1, 2}) == 0);
  CHECK(coordinate_of(4, {2, 3}) == 3);
  CHECK(to_string(Position{2, 5}) == "(2,5)");
}

TEST_CASE("pattern closure") {
  const Pattern p(4, {{1, 2}, {2, 3}});
  CHECK_FALSE(pattern_is_closed(p));
  const Pattern c = pattern_closure(p);
  CHECK(c.contains({1, 3}));
  CHECK(c.size() == 3);
  CHECK(pattern_is_closed(c));
  CHECK(pattern_is_closed(Pattern::full(5)));
}

TEST_CASE("group law agrees with matrix multiplication") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    const oracle::Fq o = oracle::Fq::from(f);
    const Algebra alg = Algebra::full(3, f);
    const auto G = oracle::group(o, 3, oracle::full_positions(3));
    CHECK(alg.order() == G.size());
    for (const auto& g : G)
      for (const auto& h : G) {
        const auto prod = group_mul(oracle::to_group_element(f, g), oracle::to_group_element(f, h));
        CHECK(oracle::from_group_element(prod) == oracle::mul(o, g, h));
      }
    for (const auto& g : G)
      CHECK(oracle::from_group_element(group_inv(oracle::to_group_element(f, g))) == oracle::inverse(o, g));
  }
}

TEST_CASE("element indexing round trip") {
  const Field f = Field::make(3);
  const Algebra alg = Algebra::full(4, f);
  CHECK(alg.order() == 729u);
  for (std::uint64_t k = 0; k < alg.order(); k += 7) CHECK(alg.index_of(alg.element(k)) == k);
  CHECK(alg.index_of(group_identity(f, 4)) == 0u);
  std::uint64_t visited = 0;
  for_each_element(alg, [&](std::uint64_t idx, const GroupElement& g) {
    CHECK(alg.index_of(g) == idx);
    ++visited;
  });
  CHECK(visited == 729u);
  CHECK_THROWS_AS(Algebra::full(8, f).order(1000), CapExceeded);
}

TEST_CASE("element orders in UT_3(2) and UT_4(2)") {
  const Field f = Field::make(2);
  std::map<long long, int> hist;
  for (const auto& g : enumerate_group(Algebra::full(3, f))) ++hist[group_order_of(g)];
  // UT_3(2) is dihedral of order 8.
  CHECK(hist == std::map<long long, int>{{1, 1}, {2, 5}, {4, 2}});
  long long max_order = 0;
  for (const auto& g : enumerate_group(Algebra::full(4, f))) max_order = std::max(max_order, group_order_of(g));
  CHECK(max_order == 4);
  CHECK(group_pow(Algebra::full(5, f).element(1), 2) == group_identity(f, 5));
}

TEST_CASE("truncated exponential and logarithm") {
  const Field f = Field::make(5);
  const Algebra alg = Algebra::full(4, f);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> pick(0, alg.order() - 1);
  for (int t = 0; t < 200; ++t) {
    const GroupElement g = alg.element(pick(rng));
    const NilMatrix x = g.body;
    CHECK(trunc_log(trunc_exp(x)) == x);
    CHECK(trunc_exp(trunc_log(g)) == g);
  }
  // Exp is a homomorphism on commuting arguments.
  const NilMatrix e12 = NilMatrix::unit(f, 4, {1, 2});
  CHECK(group_mul(trunc_exp(e12), trunc_exp(e12.scaled(f.element(2)))) == trunc_exp(e12.scaled(f.element(3))));
}

TEST_CASE("Toeplitz algebra") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    const Algebra a = Algebra::toeplitz(5, f);
    CHECK(a.dim() == 4);
    CHECK(a.is_commutative());
    CHECK(a.is_subalgebra_of(Algebra::full(5, f)));
    CHECK_FALSE(a.is_pattern());
    CHECK_FALSE(Algebra::full(3, f).is_commutative());
    for (const auto& b : a.basis()) CHECK(a.contains(b));
  }
}

TEST_CASE("subspaces that are not subalgebras are rejected") {
  const Field f = Field::make(2);
  const std::size_t m = triangle_size(3);
  const Subspace s = Subspace::coordinate(f, m, {coordinate_of(3, {1, 2}), coordinate_of(3, {2, 3})});
  CHECK_THROWS_AS(Algebra::from_subspace(3, f, s), std::invalid_argument);
}

TEST_CASE("ideal classification") {
  const Field f = Field::make(2);
  const Algebra u4 = Algebra::full(4, f);
  const std::size_t m = triangle_size(4);
  auto coords = [](std::initializer_list<Position> ps) {
    std::vector<std::size_t> out;
    for (auto p : ps) out.push_back(coordinate_of(4, p));
    return out;
  };
  // Column 3: n h lies in h, h n does not.
  const IdealReport col = ideal_check(Subspace::coordinate(f, m, coords({{1, 3}, {2, 3}})), u4);
  CHECK(col.left_ideal);
  CHECK_FALSE(col.right_ideal);
  CHECK(col.kind() == "left ideal");
  // Row 2: h n lies in h, n h does not.
  const IdealReport row = ideal_check(Subspace::coordinate(f, m, coords({{2, 3}, {2, 4}})), u4);
  CHECK(row.right_ideal);
  CHECK_FALSE(row.left_ideal);
  CHECK(row.kind() == "right ideal");
  const IdealReport last = ideal_check(Subspace::coordinate(f, m, coords({{1, 4}, {2, 4}, {3, 4}})), u4);
  CHECK(last.two_sided());
  CHECK(last.kind() == "two-sided ideal");
  const IdealReport none = ideal_check(Subspace::coordinate(f, m, coords({{1, 2}, {2, 3}})), u4);
  CHECK(none.kind() == "none");
}

TEST_CASE("projection along a two-sided ideal is a homomorphism") {
  const Field f = Field::make(2);
  const Algebra u4 = Algebra::full(4, f);
  const Algebra a = Algebra::pattern(Pattern(4, {{1, 2}, {1, 3}, {2, 3}}), f);
  const std::size_t m = triangle_size(4);
  const Subspace h = Subspace::coordinate(f, m, {coordinate_of(4, {1, 4}), coordinate_of(4, {2, 4}), coordinate_of(4, {3, 4})});
  const QuotientProjection pi(u4, a, h);
  const auto G = enumerate_group(u4);
  for (const auto& g : G) {
    CHECK(a.contains(pi.project(g).body));
    for (const auto& k : G) CHECK(pi.project(group_mul(g, k)) == group_mul(pi.project(g), pi.project(k)));
  }
  const Subspace not_ideal = Subspace::coordinate(f, m, {coordinate_of(4, {1, 3}), coordinate_of(4, {2, 3}), coordinate_of(4, {3, 4})});
  CHECK_THROWS_AS(QuotientProjection(u4, Algebra::pattern(Pattern(4, {{1, 2}, {1, 4}, {2, 4}}), f), not_ideal),
                  std::invalid_argument);
}

TEST_CASE("powers of u_n") {
  const Field f = Field::make(3);
  const auto powers = algebra_powers(Algebra::full(5, f));
  REQUIRE(powers.size() == 5);
  CHECK(powers[0].dim() == 10);
  CHECK(powers[1].dim() == 6);
  CHECK(powers[2].dim() == 3);
  CHECK(powers[3].dim() == 1);
  CHECK(powers[4].dim() == 0);
}

TEST_CASE("generators generate") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    const Algebra alg = Algebra::full(4, f);
    std::set<std::uint64_t> seen{0};
    std::vector<GroupElement> frontier{group_identity(f, 4)};
    while (!frontier.empty()) {
      std::vector<GroupElement> next;
      for (const auto& g : frontier)
        for (const auto& x : alg.generators()) {
          const GroupElement h = group_mul(g, GroupElement{x});
          if (seen.insert(alg.index_of(h)).second) next.push_back(h);
        }
      frontier = std::move(next);
    }
    CHECK(seen.size() == alg.order());
  }
}

}
