#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "toric/cubical.hpp"
#include "toric/motzkin.hpp"
#include "toric/noncrossing.hpp"

using namespace toric;

TEST_CASE("path validation and serialization") {
  CHECK(path_str(parse_path("UrbD")) == "UrbD");
  CHECK(parse_path("").empty());
  CHECK_THROWS_AS(parse_path("b"), std::invalid_argument);   // blue at level 0
  CHECK_THROWS_AS(parse_path("UD D"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("DU"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("UU"), std::invalid_argument);  // ends high
}

TEST_CASE("enumeration") {
  CHECK(enumerate_motzkin(0).size() == 1);
  std::set<std::string> two;
  for (const auto& p : enumerate_motzkin(2)) two.insert(path_str(p));
  CHECK(two == std::set<std::string>{"UD", "rr"});
  CHECK(enumerate_motzkin(3).size() == 5);
  for (int n = 0; n <= 9; ++n) {
    auto paths = enumerate_motzkin(n);
    CHECK(Int(paths.size()) == catalan(n));
    for (const auto& p : paths) CHECK_NOTHROW(validate_path(p));
  }
}

TEST_CASE("step-pair statistic") {
  CHECK(s_statistic(parse_path("UD")) == 1);
  CHECK(s_statistic(parse_path("rr")) == 0);
  CHECK(s_statistic(parse_path("UrD")) == 1);  // only the (up, red) pair counts
  CHECK(s_statistic(parse_path("UbD")) == 1);  // only the (blue, down) pair
}

TEST_CASE("path generating polynomial") {
  CHECK(motzkin_g(0) == Polynomial(1));
  CHECK(motzkin_g(2) == Polynomial({1, 1}));
  CHECK(motzkin_g(3) == Polynomial({1, 4}));
  for (int n = 0; n <= 9; ++n) CHECK(motzkin_g(n) == g_cube(n));
}

TEST_CASE("g recursion") {
  CHECK(g_recursion(0) == Polynomial(1));
  CHECK(g_recursion(1) == Polynomial(1));
  CHECK(g_recursion(2) == Polynomial({1, 1}));
  for (int k = 0; k <= 12; ++k) CHECK(g_recursion(k) == g_cube(k));
}

TEST_CASE("P recursion") {
  CHECK(P_recursion(1) == Polynomial(1));
  CHECK(P_recursion(2) == Polynomial({2, -1}));
  Polynomial omt({1, -1});
  for (int n = 0; n <= 9; ++n) {
    Polynomial rhs = pow(omt, n + 1) + Polynomial::x() * P_recursion(n + 1);
    CHECK(rhs == g_cube(n));
    CHECK(P_recursion(n + 1) == nc_weighted_P(n + 1));
  }
  CHECK_THROWS_AS(P_recursion(0), std::invalid_argument);
}

TEST_CASE("Morgan-Voyce polynomials") {
  CHECK(morgan_voyce(0, MorganVoyce::b) == Polynomial(1));
  CHECK(morgan_voyce(1, MorganVoyce::b) == Polynomial({1, 1}));
  CHECK(morgan_voyce(2, MorganVoyce::b) == Polynomial({1, 3, 1}));
  CHECK(morgan_voyce(1, MorganVoyce::p) == Polynomial({-1, 1}));
  for (int n = 0; n <= 15; ++n) {
    Polynomial flipped = morgan_voyce(n, MorganVoyce::p).substitute_affine(-1, 0);
    if (n % 2) flipped = -flipped;
    CHECK(flipped == morgan_voyce(n, MorganVoyce::b));
  }
}

TEST_CASE("weighted moments") {
  MomentSpec spec = catalan_moment_spec(7);
  for (int n = 0; n <= 12; ++n)
    CHECK(weighted_moment(n, spec) == Polynomial(catalan(n)));

  MomentSpec bare{{Polynomial(), Polynomial()}, {Polynomial(), Polynomial(1)}};
  CHECK(weighted_moment(2, bare) == Polynomial(1));  // only the up-down path
  CHECK(weighted_moment(3, bare) == Polynomial());   // parity
  CHECK_THROWS_AS(weighted_moment(8, bare), std::invalid_argument);

  MomentSpec symbolic{{Polynomial::x(), Polynomial(2)},
                      {Polynomial(), Polynomial::x()}};
  CHECK(weighted_moment(2, symbolic) ==
        Polynomial::x() + Polynomial::x() * Polynomial::x());
}

TEST_CASE("orthogonality of the p-polynomials") {
  CHECK(orthogonality_check(0, 1) == 0);
  CHECK(orthogonality_check(1, 2) == 0);
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; l <= 6; ++l) {
      if (k == l)
        CHECK(orthogonality_check(k, l) != 0);
      else
        CHECK(orthogonality_check(k, l) == 0);
    }
}
