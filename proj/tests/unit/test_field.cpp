#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "unitri/field.hpp"

using namespace unitri;

TEST_SUITE("field") {

TEST_CASE("prime fields agree with modular arithmetic") {
  for (int p : {2, 3, 5, 7, 11}) {
    const Field f = Field::make(p);
    CHECK(f.q() == static_cast<std::uint32_t>(p));
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        const auto x = f.element(static_cast<std::uint32_t>(a)), y = f.element(static_cast<std::uint32_t>(b));
        CHECK(f.add(x, y).rep == static_cast<std::uint32_t>((a + b) % p));
        CHECK(f.sub(x, y).rep == static_cast<std::uint32_t>(((a - b) % p + p) % p));
        CHECK(f.mul(x, y).rep == static_cast<std::uint32_t>((a * b) % p));
      }
      CHECK(f.trace(f.element(static_cast<std::uint32_t>(a))) == a);
      if (a) CHECK(f.mul(f.inv(f.element(static_cast<std::uint32_t>(a))), f.element(static_cast<std::uint32_t>(a))) == f.one());
    }
  }
}

TEST_CASE("extension fields agree with polynomial arithmetic") {
  for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {3, 3}}) {
    const Field f = Field::make(p, e);
    const oracle::Fq o = oracle::Fq::from(f);
    REQUIRE(f.q() == static_cast<std::uint32_t>(o.q));
    CHECK(is_irreducible_mod_p(f.modulus(), p));
    for (int a = 0; a < o.q; ++a) {
      for (int b = 0; b < o.q; ++b) {
        const auto x = f.element(static_cast<std::uint32_t>(a)), y = f.element(static_cast<std::uint32_t>(b));
        CHECK(f.add(x, y).rep == static_cast<std::uint32_t>(o.add(a, b)));
        CHECK(f.mul(x, y).rep == static_cast<std::uint32_t>(o.mul(a, b)));
      }
      CHECK(f.trace(f.element(static_cast<std::uint32_t>(a))) == o.trace(a));
    }
  }
}

TEST_CASE("F_4 with x^2 + x + 1") {
  const Field f = Field::make(2, 2);
  CHECK(f.modulus() == std::vector<int>{1, 1, 1});
  // x * x = x + 1, x * (x + 1) = 1.
  CHECK(f.mul(f.element(2), f.element(2)).rep == 3u);
  CHECK(f.mul(f.element(2), f.element(3)).rep == 1u);
  CHECK(f.trace(f.element(1)) == 0);
  CHECK(f.trace(f.element(2)) == 1);
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const Field f = Field::of_order(q);
    std::set<std::uint32_t> seen;
    FieldElement x = f.one();
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      seen.insert(x.rep);
      x = f.mul(x, f.primitive_element());
    }
    CHECK(seen.size() == q - 1);
    CHECK(x == f.one());
  }
}

TEST_CASE("trace is additive, Frobenius invariant and balanced") {
  for (std::uint32_t q : {4u, 8u, 9u, 25u}) {
    const Field f = Field::of_order(q);
    std::vector<int> counts(static_cast<std::size_t>(f.p()), 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto x = f.element(a);
      ++counts[static_cast<std::size_t>(f.trace(x))];
      CHECK(f.trace(f.pow(x, f.p())) == f.trace(x));
      for (std::uint32_t b = 0; b < q; ++b)
        CHECK(f.trace(f.add(x, f.element(b))) == (f.trace(x) + f.trace(f.element(b))) % f.p());
    }
    for (int c : counts) CHECK(c == static_cast<int>(q) / f.p());
  }
}

TEST_CASE("from_int and prime basis") {
  const Field f = Field::make(3, 2);
  CHECK(f.from_int(-1) == f.neg(f.one()));
  CHECK(f.from_int(7) == f.one());
  const auto basis = f.prime_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == f.one());
  CHECK(basis[1].rep == 3u);
}

TEST_CASE("invalid fields are rejected") {
  CHECK_THROWS_AS(Field::make(6), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<int>{1, 0, 1}), std::invalid_argument);  // x^2 + 1 = (x + 1)^2
  CHECK_THROWS_AS(Field::of_order(12), std::invalid_argument);
  CHECK(Field::make(2, 2, std::vector<int>{1, 1, 1}) == Field::make(2, 2));
  CHECK_FALSE(is_irreducible_mod_p({2, 0, 1}, 3));  // x^2 + 2 = (x + 1)(x + 2)
  CHECK(is_irreducible_mod_p({1, 0, 1}, 3));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

}
