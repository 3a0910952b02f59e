// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amc/clifford.hpp"
#include "amc/diagonal.hpp"
#include "amc/enumeration.hpp"
#include "amc/families.hpp"
#include "amc/moebius.hpp"
#include "oracles.hpp"

using namespace amc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

Matrix in_perm_order(const DiagonalTensor& d, const Semilattice& s) {
  const auto& perm = s.canonical_perm();
  Matrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) m(i, j) = d.at(perm[i], perm[j]);
  return m;
}

CliffordSemigroup g_n(std::uint32_t n) {
  const Semilattice s = families::six_element();
  std::vector<FiniteAbelianGroup> groups(6);
  groups[3] = FiniteAbelianGroup::cyclic(n);
  return build_clifford(s, groups, trivial_homs(s, groups)).value();
}

std::vector<Semilattice> all_classes(std::size_t max) {
  std::vector<Semilattice> out;
  for (std::size_t n = 1; n <= max; ++n)
    for (auto& s : enumerate_semilattices(n)) out.push_back(std::move(s));
  return out;
}

std::string str(std::size_t v) { return std::to_string(v); }

Outcome golden_matrices() {
  Outcome o;
  o.require(diagonal_recursive(families::chain(1)).matrix() == Matrix{{2, -1}, {-1, 1}}, "L_1");
  o.require(diagonal_recursive(families::flat(2)).matrix() == oracle::flat_diagonal(2), "F_2");
  const Semilattice f21 = families::unitized_flat(2);
  o.require(in_perm_order(diagonal_recursive(f21), f21) == oracle::unitized_flat_diagonal(2), "F_2^1");
  o.require(diagonal_recursive(families::six_element()).matrix() == oracle::six_element_diagonal(), "six-element");
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto d = diagonal_recursive(families::chain(n));
    o.require(amenability_constant(d) == Rational(static_cast<long>(4 * n + 1)), "AM(L_" + str(n) + ")");
    o.require(d.matrix() == oracle::chain_diagonal(n), "[D] of L_" + str(n));
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto d = diagonal_recursive(families::flat(n));
    o.require(amenability_constant(d) == Rational(static_cast<long>(4 * n + 1)), "AM(F_" + str(n) + ")");
    o.require(d.matrix() == oracle::flat_diagonal(n), "[D] of F_" + str(n));
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    const Semilattice s = families::unitized_flat(n);
    const auto d = diagonal_recursive(s);
    o.require(amenability_constant(d) == Rational(static_cast<long>(4 * n * n + 4 * n + 1)), "AM(F_" + str(n) + "^1)");
    o.require(in_perm_order(d, s) == oracle::unitized_flat_diagonal(n), "[D] of F_" + str(n) + "^1");
  }
  long five = 1;
  for (std::size_t n = 1; n <= 4; ++n) {
    five *= 5;
    const auto d = diagonal_recursive(families::powerset(n));
    o.require(d.size() == (std::size_t{1} << n), "P_" + str(n) + " size");
    o.require(amenability_constant(d) == Rational(five), "AM(P_" + str(n) + ")");
  }
  return o;
}

Outcome clifford_family() {
  Outcome o;
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const auto d = diagonal_solve(g_n(n));
    o.require(amenability_constant(d) == Rational(41) + Rational(4 * (static_cast<long>(n) - 1), n),
              "AM(G_" + str(n) + ")");
    o.require(d.matrix() == oracle::clifford_g_diagonal(n), "[D] of G_" + str(n));
  }
  o.require(am_constant(g_n(2)) == 43, "AM(G_2) = 43");
  return o;
}

Outcome triple_oracle(const std::vector<Semilattice>& classes) {
  Outcome o;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Semilattice& s = classes[i];
    const auto rec = diagonal_recursive(s);
    const CliffordSemigroup g = trivial_clifford(s);
    o.require(same_coefficients(rec, diagonal_via_mobius(s)), "recursive vs Moebius, class " + str(i));
    o.require(same_coefficients(rec, collapse(diagonal_solve(g), g)), "recursive vs solver, class " + str(i));
  }
  return o;
}

Outcome mod4_sweep(const std::vector<Semilattice>& classes) {
  Outcome o;
  std::vector<bool> seen(6, false);
  for (const auto& s : classes) {
    const Rational am = amenability_constant(diagonal_recursive(s));
    o.require(am.is_integer() && am.mod(4) == 1, "AM " + am.str() + " at size " + str(s.size()));
    const auto k = (am - 1) / 4;
    if (k.is_integer() && k.to_int64() < 6) seen[static_cast<std::size_t>(k.to_int64())] = true;
  }
  for (std::size_t k = 0; k <= 5; ++k) {
    o.require(seen[k], "4k+1 missing for k=" + str(k));
    o.require(amenability_constant(diagonal_recursive(families::chain(k))) == Rational(static_cast<long>(4 * k + 1)),
              "L_" + str(k) + " witness");
  }
  return o;
}

Outcome bound_sweep(const std::vector<Semilattice>& classes) {
  Outcome o;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Semilattice& s = classes[i];
    const auto d = diagonal_recursive(s);
    const long n = static_cast<long>(s.size());
    o.require(amenability_constant(d) >= Rational(2 * n - 1), "AM < 2|S|-1 for class " + str(i));
    for (Element p = 0; p < s.size(); ++p) {
      const Rational& dpp = d.at(p, p);
      o.require(dpp >= 1, "d(p,p) < 1 in class " + str(i));
      if (s.is_unital() && p != *s.unit_element())
        o.require(dpp.is_integer() && dpp.mod(2) == 0, "odd d(p,p) below the unit in class " + str(i));
    }
  }
  return o;
}

Outcome structural(const std::vector<Semilattice>& classes) {
  Outcome o;
  std::vector<Semilattice> all = classes;
  for (std::size_t n = 1; n <= 6; ++n) {
    all.push_back(families::chain(n));
    all.push_back(families::flat(n));
    all.push_back(families::unitized_flat(n));
  }
  all.push_back(families::powerset(4));
  all.push_back(families::six_element());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Semilattice& s = all[i];
    const auto d = diagonal_recursive(s);
    Rational total;
    for (Element p = 0; p < s.size(); ++p) {
      Rational row;
      for (Element t = 0; t < s.size(); ++t) row += d.at(p, t);
      o.require(row == Rational(p == s.minimum() ? 1 : 0), "row sum, instance " + str(i));
      total += row;
    }
    o.require(total == 1, "total sum, instance " + str(i));
    o.require(d.matrix().is_symmetric(), "symmetry, instance " + str(i));
    o.require(d.matrix().is_integral(), "integrality, instance " + str(i));
  }
  return o;
}

Outcome collapse_check() {
  Outcome o;
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const CliffordSemigroup g = g_n(n);
    const auto d = diagonal_solve(g);
    o.require(collapse(d, g).matrix() == oracle::six_element_diagonal(), "collapse of G_" + str(n));
    o.require(amenability_constant(d) >= 41, "AM(G_" + str(n) + ") >= AM(S)");
  }
  GapSearchConfig c;
  c.skeleton_max_size = 3;
  c.max_cyclic_order = 3;
  for (const auto& inst : gap_family_instances(c)) {
    const auto g = build_instance(inst);
    if (!g) continue;
    const auto d = diagonal_solve(*g);
    const Rational skeleton = amenability_constant(diagonal_recursive(g->skeleton()));
    o.require(amenability_constant(d) >= skeleton, "AM(G) < AM(skeleton) for " + inst.describe());
    o.require(same_coefficients(collapse(d, *g), diagonal_recursive(g->skeleton())), "collapse for " + inst.describe());
  }
  return o;
}

Outcome enumeration_counts() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = enumerate_semilattices(n, EnumerationStrategy::PosetSpace);
    o.require(a.size() == expected[n - 1], "count at size " + str(n) + " is " + str(a.size()));
    if (n <= 4) {
      o.require(oracle::brute_force_class_count(n) == a.size(), "table brute force at size " + str(n));
    } else {
      const auto b = enumerate_semilattices(n, EnumerationStrategy::Extension);
      o.require(a == b, "strategies disagree at size " + str(n));
    }
  }
  return o;
}

Outcome gap() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const GapSearchReport r = gap_search(GapSearchConfig{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(r.ok(), str(r.in_gap.size()) + " instances inside (5,9)");
  o.require(r.min_above_five && *r.min_above_five >= 9, "smallest AM above 5 is below 9");
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  if (o.pass) {
    std::ostringstream os;
    os << r.instances << " instances, AM values {";
    bool first = true;
    for (const auto& [am, k] : r.am_counts) {
      os << (first ? "" : ", ") << am.str() << " x" << k;
      first = false;
    }
    os << "}, " << static_cast<int>(secs * 1000) << " ms";
    o.detail = os.str();
  }
  return o;
}

Outcome properties(const std::vector<Semilattice>& classes) {
  Outcome o;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Semilattice& s = classes[i];
    if (s.size() > 5) continue;
    const MobiusTable mu = mobius_table(s);
    for (Element t = 0; t < s.size(); ++t)
      for (Element u = 0; u < s.size(); ++u) {
        if (!s.leq(t, u)) continue;
        std::int64_t sum = 0;
        for (Element r = 0; r < s.size(); ++r)
          if (s.leq(t, r) && s.leq(r, u)) sum += mu.mu(t, r);
        o.require(sum == (t == u ? 1 : 0), "Moebius inversion in class " + str(i));
      }
    L1Vector x(s.table_ptr()), y(s.table_ptr());
    for (Element e = 0; e < s.size(); ++e) {
      x[e] = Rational(num(rng), den(rng));
      y[e] = Rational(num(rng), den(rng));
    }
    const auto fx = schutzenberger(s, x), fy = schutzenberger(s, y), fxy = schutzenberger(s, convolve(x, y));
    for (Element t = 0; t < s.size(); ++t) o.require(fxy[t] == fx[t] * fy[t], "Schutzenberger product, class " + str(i));
    o.require(schutzenberger_inverse(s, fx) == x, "Schutzenberger inverse, class " + str(i));

    const auto d = diagonal_recursive(s);
    const auto u = unit(s);
    o.require(verify_diagonal(d, u).ok, "diagonal rejected, class " + str(i));
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        Matrix m = d.matrix();
        m(a, b) += Rational(1, 2);
        const auto check = verify_diagonal(DiagonalTensor(d.base(), d.order(), m), u);
        o.require(!check.ok && !check.witness.empty(), "perturbation accepted, class " + str(i));
      }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Semilattice> classes = all_classes(6);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden matrices", golden_matrices},
      {"closed-form constants", closed_forms},
      {"Clifford family G_n", clifford_family},
      {"triple-oracle equality", [&] { return triple_oracle(classes); }},
      {"AM = 1 mod 4 sweep", [&] { return mod4_sweep(classes); }},
      {"2|S|-1 bound sweep", [&] { return bound_sweep(classes); }},
      {"structural identities", [&] { return structural(classes); }},
      {"collapse", collapse_check},
      {"enumeration counts", enumeration_counts},
      {"gap search", gap},
      {"property tests", [&] { return properties(classes); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
