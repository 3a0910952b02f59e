#include <doctest.h>

#include <random>

#include "amc/matrix.hpp"
#include "amc/rational.hpp"
#include "oracles.hpp"

using amc::LinearSystem;
using amc::Matrix;
using amc::Rational;
namespace solve = amc::solve;

TEST_CASE("rational normalization and rendering") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-8, 4).str() == "-2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational decimal truncates") {
  CHECK(Rational(2, 3).decimal(4) == "0.6666");
  CHECK(Rational(-1, 3).decimal(2) == "-0.33");
  CHECK(Rational(43).decimal(2) == "43.00");
  CHECK(Rational(7, 2).decimal(0) == "3");
}

TEST_CASE("rational mod and ordering") {
  CHECK(Rational(41).mod(4) == 1);
  CHECK(Rational(-3).mod(4) == 1);
  CHECK_THROWS(Rational(1, 2).mod(4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
}

TEST_CASE("kronecker product") {
  const Matrix a{{2, -1}, {-1, 1}};
  const Matrix k = kron(a, a);
  CHECK(k.rows() == 4);
  CHECK(k(0, 0) == 4);
  CHECK(k(0, 3) == 1);
  CHECK(k(1, 2) == 1);
  CHECK(k(3, 3) == 1);
  CHECK(k.abs_sum() == a.abs_sum() * a.abs_sum());
  CHECK(k.is_symmetric());
}

TEST_CASE("sparse elimination agrees with dense Gauss-Jordan") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    Matrix a(n, n);
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = entry(rng);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    }
    const auto expected = oracle::dense_solve(a, b);
    const auto got = amc::solve_linear(a, b);
    if (expected.empty()) {
      CHECK_FALSE(std::holds_alternative<solve::Unique>(got));
    } else {
      REQUIRE(std::holds_alternative<solve::Unique>(got));
      CHECK(std::get<solve::Unique>(got).x == expected);
    }
  }
}

TEST_CASE("linear system classifies outcomes") {
  SUBCASE("inconsistent") {
    LinearSystem sys(2);
    sys.add_equation({{0, 1}, {1, 1}}, 1);
    sys.add_equation({{0, 2}, {1, 2}}, 3);
    const auto r = sys.solve();
    REQUIRE(std::holds_alternative<solve::Inconsistent>(r));
    CHECK(std::get<solve::Inconsistent>(r).row == 1);
  }
  SUBCASE("underdetermined") {
    LinearSystem sys(3);
    sys.add_equation({{0, 1}, {2, -1}}, 0);
    sys.add_equation({{1, 1}}, 4);
    const auto r = sys.solve();
    REQUIRE(std::holds_alternative<solve::Underdetermined>(r));
    CHECK(std::get<solve::Underdetermined>(r).free_column == 2);
  }
  SUBCASE("duplicate columns combine") {
    LinearSystem sys(1);
    sys.add_equation({{0, 1}, {0, 2}}, 1);
    const auto r = sys.solve();
    REQUIRE(std::holds_alternative<solve::Unique>(r));
    CHECK(std::get<solve::Unique>(r).x[0] == Rational(1, 3));
  }
  SUBCASE("redundant rows are harmless") {
    LinearSystem sys(2);
    sys.add_equation({{0, 1}, {1, 1}}, 2);
    sys.add_equation({{0, 1}, {1, -1}}, 0);
    sys.add_equation({{0, 3}, {1, 1}}, 4);
    CHECK(sys.rank() == 2);
    CHECK(std::get<solve::Unique>(sys.solve()).x == std::vector<Rational>{1, 1});
  }
  CHECK_THROWS_AS(LinearSystem(2).add_equation({{2, 1}}, 0), std::out_of_range);
}
