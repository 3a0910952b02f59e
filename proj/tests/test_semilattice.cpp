#include <doctest.h>

#include <random>

#include "amc/families.hpp"
#include "amc/semilattice.hpp"

using namespace amc;

TEST_CASE("validation reports each violated axiom once") {
  SUBCASE("broken commutativity") {
    const auto v = validate_meet_table({{0, 0, 0}, {0, 1, 0}, {0, 1, 2}});
    REQUIRE_FALSE(v.ok());
    REQUIRE(v.report().violations.size() >= 1);
    CHECK(v.report().violations[0].axiom == "commutative");
    CHECK(v.report().violations[0].witness == std::vector<std::int64_t>{1, 2});
  }
  SUBCASE("not idempotent") {
    const auto v = validate_meet_table({{0, 0}, {0, 0}});
    REQUIRE_FALSE(v.ok());
    CHECK(v.report().has("idempotent"));
    CHECK(v.report().violations[0].witness == std::vector<std::int64_t>{1});
  }
  SUBCASE("not associative") {
    // 1 and 2 meet in 0, 2 and 3 in 1, 1 and 3 in 2: no order fits.
    const auto v = validate_meet_table({{0, 0, 0, 0}, {0, 1, 0, 2}, {0, 0, 2, 1}, {0, 2, 1, 3}});
    REQUIRE_FALSE(v.ok());
    CHECK(v.report().has("associative"));
    CHECK_FALSE(v.report().has("commutative"));
  }
  SUBCASE("out of range and ragged") {
    CHECK(validate_meet_table({{0, 5}, {5, 1}}).report().has("range"));
    CHECK(validate_meet_table({{0, 0}, {0}}).report().has("square"));
    CHECK(validate_meet_table({}).report().has("square"));
    CHECK(validate_meet_table({{0}}, {"a", "b"}).report().has("labels"));
  }
  CHECK_THROWS_AS(validate_meet_table({{0, 0}, {0, 0}}).value(), InvalidInput);
}

TEST_CASE("hasse input") {
  SUBCASE("diamond") {
    const auto s = from_hasse(4, {{1, 0}, {2, 0}, {3, 1}, {3, 2}}).value();
    CHECK(s.meet(1, 2) == 0);
    CHECK(s.meet(3, 1) == 1);
    CHECK(s.is_unital());
  }
  SUBCASE("two minima have no meet") {
    const auto v = from_hasse(3, {{2, 0}, {2, 1}});
    CHECK(v.report().has("no_lower_bound"));
  }
  SUBCASE("bowtie has ambiguous meets") {
    const auto v = from_hasse(5, {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {4, 1}, {4, 2}});
    REQUIRE(v.report().has("ambiguous_meet"));
    CHECK(v.report().violations[0].witness == std::vector<std::int64_t>{3, 4, 1, 2});
  }
  SUBCASE("cycle") { CHECK(from_hasse(2, {{1, 0}, {0, 1}}).report().has("cycle")); }
  SUBCASE("range") { CHECK(from_hasse(2, {{2, 0}}).report().has("range")); }
}

TEST_CASE("order data of the six-element example") {
  const Semilattice s = families::six_element();
  CHECK(s.minimum() == 0);
  CHECK(s.height() == 3);
  CHECK(s.levels() == std::vector<std::size_t>{0, 1, 1, 2, 2, 3});
  CHECK(s.canonical_perm() == std::vector<Element>{0, 1, 2, 3, 4, 5});
  CHECK(s.maximal() == std::vector<Element>{5});
  CHECK(s.ideal_chain().size() == 4);
  CHECK(s.ideal_chain()[1] == std::vector<Element>{0, 1, 2, 3, 4});
  CHECK(s.hasse_edges().size() == 7);
  CHECK(s.meet(3, 4) == 0);
  CHECK(s.meet(1, 2) == 0);
  CHECK(s.leq(2, 3));
  CHECK_FALSE(s.leq(2, 4));
}

TEST_CASE("canonical perm puts every ideal of the chain first") {
  const Semilattice s = families::powerset(3);
  const auto& perm = s.canonical_perm();
  CHECK(perm.front() == 0);
  CHECK(perm.back() == 7);
  for (const auto& ideal : s.ideal_chain()) {
    std::vector<Element> prefix(perm.begin(), perm.begin() + static_cast<long>(ideal.size()));
    std::sort(prefix.begin(), prefix.end());
    CHECK(prefix == ideal);
  }
}

TEST_CASE("maximal elements") {
  const Semilattice s = families::six_element();
  const std::vector<Element> sub{0, 1, 2, 4};
  CHECK(maximal_elements(s, sub) == std::vector<Element>{1, 2, 4});
  CHECK_THROWS_AS(maximal_elements(s, std::span<const Element>{}), std::invalid_argument);
}

TEST_CASE("products and Cayley embedding") {
  const Semilattice l1 = families::chain(1);
  const Semilattice p2 = product(l1, l1);
  CHECK(p2.size() == 4);
  CHECK(are_isomorphic(p2, families::powerset(2)));
  const auto down = cayley_embed(families::six_element());
  CHECK(down[3] == std::vector<Element>{0, 1, 2, 3});
  CHECK(down[4] == std::vector<Element>{0, 4});
  // The embedding is a homomorphism into (sets, intersection).
  const Semilattice s = families::six_element();
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      std::vector<Element> meet;
      std::set_intersection(down[a].begin(), down[a].end(), down[b].begin(), down[b].end(), std::back_inserter(meet));
      CHECK(meet == down[s.meet(a, b)]);
    }
}

TEST_CASE("isomorphism and canonical form are relabeling invariant") {
  std::mt19937 rng(11);
  const std::vector<Semilattice> samples{families::six_element(), families::powerset(3), families::unitized_flat(3),
                                         families::chain(4)};
  for (const auto& s : samples) {
    const auto base = canonical_form(s);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Element> perm(s.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Semilattice t = relabel(s, perm);
      const auto phi = find_isomorphism(s, t);
      REQUIRE(phi.has_value());
      for (Element a = 0; a < s.size(); ++a)
        for (Element b = 0; b < s.size(); ++b) CHECK((*phi)[s.meet(a, b)] == t.meet((*phi)[a], (*phi)[b]));
      const auto other = canonical_form(t);
      CHECK(other.code == base.code);
      CHECK(other.semilattice == base.semilattice);
    }
  }
  CHECK_FALSE(are_isomorphic(families::chain(3), families::flat(3)));
  CHECK_FALSE(are_isomorphic(families::chain(2), families::chain(3)));
  CHECK(canonical_form(families::chain(3)).code != canonical_form(families::flat(3)).code);
}
