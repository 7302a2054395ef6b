#include <doctest.h>

#include "tatek/exactnum.hpp"

#include <cmath>
#include <cstdio>
#include <random>

using namespace tatek;

namespace {

Cyclotomic random_cyclotomic(std::mt19937& rng, long conductor) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::vector<Rational> coeffs(euler_phi(conductor));
  for (auto& c : coeffs) c = Rational(num(rng), den(rng));
  return Cyclotomic(conductor, coeffs);
}

}  // namespace

TEST_CASE("rational parse edge cases") {
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("6/-4"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
}

TEST_CASE("defining relations") {
  const auto z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4 * z4 == Cyclotomic(-1));
  const auto z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 + z3 * z3 == Cyclotomic(-1));
  Cyclotomic sum;
  for (long k = 0; k < 5; ++k) sum += Cyclotomic::root_of_unity(5, 1).pow(k);
  CHECK(sum.is_zero());
  CHECK(sum.conductor() == 1);
}

TEST_CASE("root_of_unity") {
  CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic(1));
  CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
  const auto z = Cyclotomic::root_of_unity(4, 1);
  CHECK(z.pow(4) == Cyclotomic(1));
  CHECK(z.pow(2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(6, 7) == Cyclotomic::root_of_unity(6, 1));
  CHECK(Cyclotomic::root_of_unity(6, -1) == Cyclotomic::root_of_unity(6, 5));
  // zeta_6^2 = zeta_3 across conductors.
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3, 1));
  CHECK_THROWS(Cyclotomic::root_of_unity(0, 1));
}

TEST_CASE("multiplicative order of roots of unity") {
  for (long n = 1; n <= 24; ++n) {
    for (long k = 0; k < n; ++k) {
      const auto z = Cyclotomic::root_of_unity(n, k);
      const long expected = n / gcd(n, k);
      Cyclotomic p = z;
      long order = 1;
      while (p != Cyclotomic(1)) {
        p *= z;
        ++order;
        REQUIRE(order <= n);
      }
      CHECK(order == expected);
    }
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  const long conductors[] = {1, 3, 4, 5, 6, 8, 12, 15};
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_cyclotomic(rng, conductors[trial % 8]);
    const auto b = random_cyclotomic(rng, conductors[(trial + 3) % 8]);
    const auto c = random_cyclotomic(rng, conductors[(trial + 5) % 8]);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("embedding coherence") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const long n = 1 + trial % 6;
    const long m = n * (1 + trial % 4);
    const auto a = random_cyclotomic(rng, n);
    const auto b = random_cyclotomic(rng, n);
    const Cyclotomic ea(m, a.coeffs_at(m)), eb(m, b.coeffs_at(m));
    CHECK(ea * eb == a * b);
    CHECK(ea + eb == a + b);
    CHECK(Cyclotomic(m, (a * b).coeffs_at(m)) == ea * eb);
  }
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), ArithmeticError);
  CHECK_THROWS_AS(Cyclotomic(4, {Rational(0), Rational(0)}).inverse(), ArithmeticError);
}

TEST_CASE("galois conjugation and integrality") {
  const auto z = Cyclotomic::root_of_unity(8, 1);
  CHECK(z.conj() == Cyclotomic::root_of_unity(8, 7));
  CHECK(z.is_integral());
  CHECK(!(z * Rational(1, 2)).is_integral());
  CHECK((z + z.conj()) * (z + z.conj()) == Cyclotomic(2));  // (sqrt 2)^2
}

TEST_CASE("complex approximation") {
  auto [re, im] = complex_approximation(Cyclotomic::root_of_unity(4, 1), 3);
  CHECK(re == "0.000");
  CHECK(im == "1.000");
  std::tie(re, im) = complex_approximation(Cyclotomic(-1), 2);
  CHECK(re == "-1.00");
  CHECK(im == "0.00");
  // Oracle: libm cos/sin of 2 pi / 3, formatted to 3 places.
  char buf_re[32], buf_im[32];
  std::snprintf(buf_re, sizeof buf_re, "%.3f", std::cos(2 * M_PI / 3));
  std::snprintf(buf_im, sizeof buf_im, "%.3f", std::sin(2 * M_PI / 3));
  std::tie(re, im) = complex_approximation(Cyclotomic::root_of_unity(3, 1), 3);
  CHECK(re == buf_re);
  CHECK(im == buf_im);
  CHECK(re == "-0.500");
  CHECK(im == "0.866");
  CHECK_THROWS(complex_approximation(Cyclotomic(1), 0));
}
