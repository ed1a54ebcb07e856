#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "toric/polynomial.hpp"

using namespace toric;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(52, 26) == Int("495918532948104"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("Catalan numbers") {
  Int expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (unsigned long n = 0; n < 9; ++n) CHECK(catalan(n) == expect[n]);
  CHECK(catalan(12) == 208012);
}

TEST_CASE("construction normalizes trailing zeros") {
  CHECK(Polynomial({1, 2, 0, 0}) == Polynomial({1, 2}));
  CHECK(Polynomial({0, 0}) == Polynomial());
  CHECK(Polynomial().is_zero());
  CHECK_THROWS_AS(Polynomial().degree(), std::logic_error);
  CHECK(Polynomial({3, 0, 5}).degree() == 2);
  CHECK(Polynomial({3, 0, 5}).coeff(1) == 0);
  CHECK(Polynomial({3}).coeff(9) == 0);
}

TEST_CASE("arithmetic") {
  Polynomial a({1, 2}), b({0, 1, 1});
  CHECK(a + b == Polynomial({1, 3, 1}));
  CHECK(a - a == Polynomial());
  CHECK(a * b == Polynomial({0, 1, 3, 2}));
  CHECK(-a == Polynomial({-1, -2}));
  CHECK(pow(Polynomial({-1, 1}), 2) == Polynomial({1, -2, 1}));
  CHECK(pow(a, 0) == Polynomial(1));
}

TEST_CASE("evaluation") {
  Polynomial p({1, -3, 2});  // 1 - 3x + 2x^2
  CHECK(p.eval(Rat(2)) == Rat(3));
  CHECK(p.eval(Rat(1, 2)) == Rat(0));
  CHECK(Polynomial().eval(Rat(7)) == Rat(0));
}

TEST_CASE("affine substitution") {
  Polynomial g4({1, 11, 2});
  CHECK(g4.substitute_affine(1, 1) == Polynomial({14, 15, 2}));
  Polynomial p({0, 0, 1});
  CHECK(p.substitute_affine(-1, 0) == p);
  CHECK(Polynomial({0, 1}).substitute_affine(-1, 0) == Polynomial({0, -1}));
}

TEST_CASE("reversal") {
  Polynomial p({1, 2, 1});
  CHECK(p.reverse(2) == p);
  CHECK(Polynomial({0, 0, 1, 1}).reverse(3) == Polynomial({1, 1}));
  CHECK(Polynomial(5).reverse(2) == Polynomial({0, 0, 5}));
  CHECK(Polynomial().reverse(3) == Polynomial());
  CHECK_THROWS_AS(Polynomial({1, 1, 1}).reverse(1), std::invalid_argument);
}

TEST_CASE("canonical text form") {
  CHECK(Polynomial({1, 11, 2}).str() == "1 + 11*x + 2*x^2");
  CHECK(Polynomial({0, 1}).str() == "0 + 1*x");
  CHECK(Polynomial().str() == "0");
}

namespace {

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9);
  std::vector<Int> c(deg(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("ring and substitution properties on random inputs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.substitute_affine(1, 1).substitute_affine(1, -1) == a);
    std::size_t d = (a.is_zero() ? 0 : a.degree()) + 2;
    CHECK(a.reverse(d).reverse(d) == a);
    Rat at2 = a.eval(Rat(2)), bt2 = b.eval(Rat(2));
    CHECK((a * b).eval(Rat(2)) == at2 * bt2);
    CHECK((a + b).eval(Rat(2)) == at2 + bt2);
  }
}
