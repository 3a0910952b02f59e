#include <doctest.h>

#include "amc/diagonal.hpp"
#include "amc/families.hpp"
#include "oracles.hpp"

using namespace amc;

namespace {

// Diagonal rows and columns rearranged to follow `order` (element indices).
Matrix in_order(const DiagonalTensor& d, const std::vector<Element>& order) {
  Matrix m(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) m(i, j) = d.at(order[i], order[j]);
  return m;
}

std::vector<Element> identity_order(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("units of the examples") {
  const auto u = unit(families::flat(3));
  CHECK(u.coeffs() == std::vector<Rational>{-2, 1, 1, 1});
  const auto c = unit(families::chain(3));
  CHECK(c.coeffs() == std::vector<Rational>{0, 0, 0, 1});
  // The unit is the identity of the convolution algebra.
  const Semilattice s = families::six_element();
  const auto us = unit(s);
  for (Element e = 0; e < s.size(); ++e) {
    const auto pm = L1Vector::point_mass(s.table_ptr(), e);
    CHECK(convolve(us, pm) == pm);
  }
}

TEST_CASE("recursive diagonal reproduces the displayed matrices") {
  CHECK(diagonal_recursive(families::chain(1)).matrix() == Matrix{{2, -1}, {-1, 1}});
  CHECK(diagonal_recursive(families::flat(2)).matrix() == oracle::flat_diagonal(2));
  CHECK(in_order(diagonal_recursive(families::unitized_flat(2)), identity_order(4)) ==
        oracle::unitized_flat_diagonal(2));
  CHECK(diagonal_recursive(families::six_element()).matrix() == oracle::six_element_diagonal());
}

TEST_CASE("recursive diagonal passes the defining equations") {
  const std::vector<Semilattice> samples{families::six_element(), families::powerset(3), families::unitized_flat(4),
                                         families::flat(5), families::chain(6)};
  for (const auto& s : samples) {
    const auto d = diagonal_recursive(s);
    const auto check = verify_diagonal(d, unit(s));
    CHECK(check.ok);
    CHECK(d.matrix().is_symmetric());
    CHECK(d.matrix().is_integral());
  }
}

TEST_CASE("verify_diagonal rejects perturbations with a witness") {
  const Semilattice s = families::six_element();
  const auto d = diagonal_recursive(s);
  const auto u = unit(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      Matrix m = d.matrix();
      m(i, j) += Rational(1, 3);
      const auto check = verify_diagonal(DiagonalTensor(d.base(), d.order(), m), u);
      CHECK_FALSE(check.ok);
      CHECK_FALSE(check.witness.empty());
      CHECK(check.expected != check.actual);
    }
  // A perturbation that keeps m(D) = u still breaks centrality.
  Matrix m = d.matrix();
  m(1, 2) += 1;
  m(2, 1) -= 1;
  const auto check = verify_diagonal(DiagonalTensor(d.base(), d.order(), m), u);
  CHECK_FALSE(check.ok);
  CHECK(check.equation == "central");
  CHECK(check.witness.size() == 3);
}

TEST_CASE("tensor of diagonals is the product diagonal") {
  const Semilattice l1 = families::chain(1);
  const auto d1 = diagonal_recursive(l1);
  const auto d2 = tensor_diagonal(d1, d1);
  const Semilattice p = product(l1, l1);
  CHECK(same_coefficients(d2, diagonal_recursive(p)));
  CHECK(amenability_constant(d2) == 25);
}

TEST_CASE("mismatched bases are rejected") {
  const auto a = families::chain(2);
  const auto b = families::flat(2);
  CHECK_THROWS_AS(convolve(unit(a), unit(b)), std::invalid_argument);
  CHECK_THROWS_AS(verify_diagonal(diagonal_recursive(a), unit(b)), std::invalid_argument);
}
