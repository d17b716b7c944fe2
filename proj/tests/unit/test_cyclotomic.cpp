#include <doctest.h>

#include <random>

#include "unitri/cyclotomic.hpp"

using namespace unitri;

namespace {

CyclotomicNumber random_number(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> c(-5, 5), d(1, 4);
  std::vector<Rational> coeffs(static_cast<std::size_t>(cyclo_make(m)->degree()));
  for (auto& x : coeffs) {
    x = Rational(c(rng), d(rng));
    x.canonicalize();
  }
  return CyclotomicNumber(m, coeffs);
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclo_make(1)->polynomial() == std::vector<long long>{-1, 1});
  CHECK(cyclo_make(2)->polynomial() == std::vector<long long>{1, 1});
  CHECK(cyclo_make(3)->polynomial() == std::vector<long long>{1, 1, 1});
  CHECK(cyclo_make(4)->polynomial() == std::vector<long long>{1, 0, 1});
  CHECK(cyclo_make(6)->polynomial() == std::vector<long long>{1, -1, 1});
  CHECK(cyclo_make(8)->polynomial() == std::vector<long long>{1, 0, 0, 0, 1});
  CHECK(cyclo_make(9)->polynomial() == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclo_make(12)->polynomial() == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(cyclo_make(15)->degree() == 8);
}

TEST_CASE("roots of unity") {
  CHECK(CyclotomicNumber::zeta(4) * CyclotomicNumber::zeta(4) == CyclotomicNumber::rational(-1));
  CHECK(CyclotomicNumber::zeta(2) == CyclotomicNumber::rational(-1));
  for (int m : {2, 3, 4, 5, 8, 9, 12}) {
    CyclotomicNumber s(m);
    for (int k = 0; k < m; ++k) s += CyclotomicNumber::zeta(m, k);
    CHECK(s.is_zero());
    CHECK(CyclotomicNumber::zeta(m, m) == CyclotomicNumber::rational(1));
    CHECK(CyclotomicNumber::zeta(m, 3).root_of_unity_exponent() == std::optional<int>(3 % m));
    CHECK(CyclotomicNumber::zeta(m).conj() * CyclotomicNumber::zeta(m) == CyclotomicNumber::rational(1));
  }
  CHECK_FALSE(CyclotomicNumber::rational(2, 4).root_of_unity_exponent().has_value());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(7);
  for (int m : {3, 4, 5, 8, 9, 12}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_number(rng, m), b = random_number(rng, m), c = random_number(rng, m);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK((a * b).conj() == a.conj() * b.conj());
    }
  }
}

TEST_CASE("embedding and mixed conductors") {
  const auto i4 = CyclotomicNumber::zeta(4);
  CHECK(i4.embed(8) == CyclotomicNumber::zeta(8, 2));
  CHECK(i4 + CyclotomicNumber::zeta(8, 2) == CyclotomicNumber::zeta(8, 2) * CyclotomicNumber::rational(2));
  CHECK(CyclotomicNumber::zeta(3) + CyclotomicNumber::zeta(3, 2) == CyclotomicNumber::rational(-1, 3));
}

TEST_CASE("rational values") {
  const auto x = CyclotomicNumber::zeta(5) + CyclotomicNumber::zeta(5).conj();
  CHECK_FALSE(x.is_rational());
  const auto y = CyclotomicNumber::zeta(3) + CyclotomicNumber::zeta(3, 2);
  CHECK(y.is_rational());
  CHECK(y.to_rational() == Rational(-1));
  CHECK_THROWS(x.to_rational());
}

TEST_CASE("Galois action and subfields") {
  const auto i4 = CyclotomicNumber::zeta(4);
  CHECK(galois_apply(i4, 3) == i4.conj());
  CHECK_THROWS_AS(galois_apply(i4, 2), std::invalid_argument);
  CHECK(in_subfield(i4, 2));
  CHECK_FALSE(in_subfield(i4, 0));
  CHECK(in_subfield(CyclotomicNumber::rational(5, 4), 0));
  CHECK(in_subfield(CyclotomicNumber::zeta(9, 3), 1));
  CHECK_FALSE(in_subfield(CyclotomicNumber::zeta(9), 1));
  CHECK(in_subfield(CyclotomicNumber::zeta(8, 4), 0));
  const auto s = CyclotomicNumber::zeta(8) + CyclotomicNumber::zeta(8, 7);  // sqrt 2
  CHECK_FALSE(in_subfield(s, 2));
  CHECK(in_subfield(s, 3));
  CHECK(prime_power_decomposition(27) == std::optional(std::pair{3, 3}));
  CHECK_FALSE(prime_power_decomposition(12).has_value());
  CHECK_FALSE(prime_power_decomposition(1).has_value());
}

TEST_CASE("additive character is a homomorphism with vanishing sum") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const Field f = Field::of_order(q);
    CyclotomicNumber total(f.p());
    for (std::uint32_t a = 0; a < q; ++a) {
      total += additive_character(f, f.element(a));
      for (std::uint32_t b = 0; b < q; ++b)
        CHECK(additive_character(f, f.add(f.element(a), f.element(b))) ==
              additive_character(f, f.element(a)) * additive_character(f, f.element(b)));
    }
    CHECK(total.is_zero());
    CHECK(additive_character(f, f.zero()) == CyclotomicNumber::rational(1));
  }
}

TEST_CASE("from exponent counts") {
  const std::vector<long long> counts{2, 0, 1};
  const auto x = CyclotomicNumber::from_exponent_counts(3, counts, Rational(1, 2));
  CHECK(x == (CyclotomicNumber::rational(2) + CyclotomicNumber::zeta(3, 2)) * Rational(1, 2));
  CHECK(x.to_string().size() > 0);
}

}
