#include "amc/clifford.hpp"

#include <algorithm>
#include <numeric>

namespace amc {

using Tuple = FiniteAbelianGroup::Tuple;

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  std::size_t total = 1;
  for (auto n : orders_) {
    if (n == 0) throw std::invalid_argument("cyclic factor of order 0");
    total *= n;
    if (total > 4096) throw std::invalid_argument("group order above 4096");
  }
  elements_.reserve(total);
  Tuple x(orders_.size(), 0);
  for (std::size_t i = 0; i < total; ++i) {
    elements_.push_back(x);
    for (std::size_t k = orders_.size(); k-- > 0;) {
      if (++x[k] < orders_[k]) break;
      x[k] = 0;
    }
  }
}

std::size_t FiniteAbelianGroup::index_of(const Tuple& x) const {
  if (x.size() != orders_.size()) throw std::invalid_argument("tuple length differs from factor count");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    if (x[k] >= orders_[k]) throw std::out_of_range("residue out of range");
    idx = idx * orders_[k] + x[k];
  }
  return idx;
}

Tuple FiniteAbelianGroup::add(const Tuple& a, const Tuple& b) const {
  Tuple c(orders_.size());
  for (std::size_t k = 0; k < orders_.size(); ++k) c[k] = (a[k] + b[k]) % orders_[k];
  return c;
}

Tuple ConnectingHom::apply(const FiniteAbelianGroup& target, const Tuple& x) const {
  const auto& orders = target.cyclic_orders();
  std::vector<std::uint64_t> acc(orders.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t k = 0; k < orders.size(); ++k)
      acc[k] = (acc[k] + static_cast<std::uint64_t>(x[i]) * gen_images[i][k]) % orders[k];
  return Tuple(acc.begin(), acc.end());
}

ConnectingHom trivial_hom(Element from, Element to, const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) {
  return ConnectingHom{from, to, std::vector<Tuple>(source.factors(), target.identity())};
}

std::vector<ConnectingHom> trivial_homs(const Semilattice& skeleton, const std::vector<FiniteAbelianGroup>& groups) {
  std::vector<ConnectingHom> homs;
  for (Element s = 0; s < skeleton.size(); ++s)
    for (Element t = 0; t < skeleton.size(); ++t)
      if (skeleton.less(t, s)) homs.push_back(trivial_hom(s, t, groups[s], groups[t]));
  return homs;
}

std::vector<Element> CliffordSemigroup::block(Element s) const {
  std::vector<Element> out(groups_[s].order());
  std::iota(out.begin(), out.end(), block_start_[s]);
  return out;
}

const ConnectingHom& CliffordSemigroup::hom(Element from, Element to) const {
  auto it = homs_.find({from, to});
  if (it == homs_.end()) throw std::out_of_range("no connecting homomorphism for this pair");
  return it->second;
}

namespace {

bool is_identity_map(const ConnectingHom& h, const FiniteAbelianGroup& g) {
  for (std::size_t i = 0; i < g.factors(); ++i) {
    Tuple e = g.identity();
    e[i] = 1 % g.cyclic_orders()[i];
    if (h.gen_images[i] != e) return false;
  }
  return true;
}

}  // namespace

Validated<CliffordSemigroup> build_clifford(const Semilattice& skeleton, std::vector<FiniteAbelianGroup> groups,
                                            std::vector<ConnectingHom> homs) {
  using W = std::int64_t;
  const std::size_t n = skeleton.size();
  ValidationReport report;
  if (groups.size() != n) {
    report.add("group_count", {static_cast<W>(groups.size()), static_cast<W>(n)});
    return report;
  }

  std::map<std::pair<Element, Element>, ConnectingHom> by_pair;
  for (auto& h : homs) {
    const W f = static_cast<W>(h.from), t = static_cast<W>(h.to);
    if (h.from >= n || h.to >= n) {
      report.add("hom_range", {f, t});
      continue;
    }
    if (!skeleton.leq(h.to, h.from)) {
      report.add("hom_not_comparable", {f, t});
      continue;
    }
    const auto& src = groups[h.from];
    const auto& dst = groups[h.to];
    bool shape_ok = h.gen_images.size() == src.factors();
    for (std::size_t i = 0; shape_ok && i < h.gen_images.size(); ++i) {
      shape_ok = h.gen_images[i].size() == dst.factors();
      for (std::size_t k = 0; shape_ok && k < dst.factors(); ++k) shape_ok = h.gen_images[i][k] < dst.cyclic_orders()[k];
    }
    if (!shape_ok) {
      report.add("hom_shape", {f, t});
      continue;
    }
    if (h.from == h.to && !is_identity_map(h, src)) {
      report.add("identity_hom", {f});
      continue;
    }
    if (!by_pair.emplace(std::pair{h.from, h.to}, h).second) report.add("duplicate_hom", {f, t});
  }
  if (!report.ok()) return report;

  for (Element s = 0; s < n; ++s) {
    std::vector<Tuple> gens;
    for (std::size_t i = 0; i < groups[s].factors(); ++i) {
      Tuple e = groups[s].identity();
      e[i] = 1 % groups[s].cyclic_orders()[i];
      gens.push_back(e);
    }
    by_pair.try_emplace(std::pair{s, s}, ConnectingHom{s, s, gens});
    for (Element t = 0; t < n; ++t)
      if (skeleton.less(t, s) && !by_pair.contains({s, t})) report.add("missing_hom", {static_cast<W>(s), static_cast<W>(t)});
  }
  if (!report.ok()) return report;

  for (const auto& [key, h] : by_pair) {
    const auto& src = groups[key.first];
    const auto& dst = groups[key.second];
    bool hom_ok = true;
    for (const auto& x : src.elements()) {
      for (const auto& y : src.elements()) {
        if (h.apply(dst, src.add(x, y)) != dst.add(h.apply(dst, x), h.apply(dst, y))) {
          hom_ok = false;
          break;
        }
      }
      if (!hom_ok) break;
    }
    if (!hom_ok) report.add("not_homomorphism", {static_cast<W>(key.first), static_cast<W>(key.second)});
  }
  if (!report.ok()) return report;

  // eta^s_t o eta^r_s = eta^r_t for r >= s >= t.
  for (Element r = 0; r < n && report.ok(); ++r)
    for (Element s = 0; s < n && report.ok(); ++s) {
      if (!skeleton.leq(s, r)) continue;
      for (Element t = 0; t < n && report.ok(); ++t) {
        if (!skeleton.leq(t, s)) continue;
        const auto& rs = by_pair.at({r, s});
        const auto& st = by_pair.at({s, t});
        const auto& rt = by_pair.at({r, t});
        for (const auto& x : groups[r].elements()) {
          if (st.apply(groups[t], rs.apply(groups[s], x)) != rt.apply(groups[t], x)) {
            report.add("transitivity", {static_cast<W>(r), static_cast<W>(s), static_cast<W>(t)});
            break;
          }
        }
      }
    }
  if (!report.ok()) return report;

  CliffordSemigroup g(skeleton);
  g.groups_ = std::move(groups);
  g.homs_ = std::move(by_pair);
  g.block_start_.assign(n, 0);
  std::vector<std::string> labels;
  for (Element s : skeleton.canonical_perm()) {
    g.block_start_[s] = g.block_of_.size();
    const auto& grp = g.groups_[s];
    for (std::size_t i = 0; i < grp.order(); ++i) {
      g.block_of_.push_back(s);
      g.offset_in_block_.push_back(i);
      std::string label = skeleton.label(s);
      if (grp.order() > 1) {
        label += "[";
        for (std::size_t k = 0; k < grp.factors(); ++k) label += (k ? "," : "") + std::to_string(grp.elements()[i][k]);
        label += "]";
      }
      labels.push_back(std::move(label));
    }
  }

  const std::size_t size = g.block_of_.size();
  std::vector<Element> products(size * size);
  for (Element x = 0; x < size; ++x)
    for (Element y = 0; y < size; ++y) {
      const Element s = g.block_of_[x], t = g.block_of_[y];
      const Element r = skeleton.meet(s, t);
      const Tuple& a = g.residues(x);
      const Tuple& b = g.residues(y);
      const Tuple c = g.groups_[r].add(g.homs_.at({s, r}).apply(g.groups_[r], a), g.homs_.at({t, r}).apply(g.groups_[r], b));
      products[x * size + y] = g.element(r, c);
    }
  g.table_ = std::make_shared<const SemigroupTable>(size, std::move(products), std::move(labels));

  const SemigroupTable& table = *g.table_;
  if (auto w = table.find_noncommuting()) report.add("commutative", {static_cast<W>(w->first), static_cast<W>(w->second)});
  if (auto w = table.find_nonassociative())
    report.add("associative", {static_cast<W>((*w)[0]), static_cast<W>((*w)[1]), static_cast<W>((*w)[2])});
  for (Element x = 0; x < size; ++x) {
    const bool idempotent = table(x, x) == x;
    const bool is_identity = g.offset_in_block_[x] == 0;
    if (idempotent != is_identity) {
      report.add("idempotents", {static_cast<W>(x)});
      break;
    }
  }
  if (!report.ok()) return report;
  return g;
}

CliffordSemigroup trivial_clifford(const Semilattice& skeleton) {
  std::vector<FiniteAbelianGroup> groups(skeleton.size());
  auto homs = trivial_homs(skeleton, groups);
  return build_clifford(skeleton, std::move(groups), std::move(homs)).value();
}

L1Vector solve_unit(const TablePtr& table) {
  const SemigroupTable& t = *table;
  const std::size_t n = t.size();
  LinearSystem system(n);
  for (Element g = 0; g < n; ++g) {
    std::vector<std::vector<LinearSystem::Term>> rows(n);
    for (Element s = 0; s < n; ++s) rows[t(s, g)].emplace_back(s, Rational(1));
    for (Element r = 0; r < n; ++r) system.add_equation(std::move(rows[r]), Rational(r == g ? 1 : 0));
  }
  auto result = system.solve();
  if (auto* ok = std::get_if<solve::Unique>(&result)) return L1Vector(table, std::move(ok->x));
  if (auto* bad = std::get_if<solve::Inconsistent>(&result)) {
    throw NotContractible("not_unital", "unit equations inconsistent at equation " + std::to_string(bad->row));
  }
  throw NotContractible("not_unital",
                        "unit not determined; free coefficient " +
                            std::to_string(std::get<solve::Underdetermined>(result).free_column));
}

DiagonalTensor solve_diagonal(const TablePtr& table, const L1Vector& u) {
  if (!same_base(table, u.base())) throw std::invalid_argument("solve_diagonal: unit is over a different base");
  const SemigroupTable& t = *table;
  const std::size_t n = t.size();
  LinearSystem system(n * n);

  std::vector<std::vector<LinearSystem::Term>> unit_rows(n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) unit_rows[t(g, h)].emplace_back(g * n + h, Rational(1));
  for (Element r = 0; r < n; ++r) system.add_equation(std::move(unit_rows[r]), u[r]);

  // Coefficient (a, b) of delta_q . D - D . delta_q.
  for (Element q = 0; q < n; ++q) {
    std::vector<std::vector<LinearSystem::Term>> rows(n * n);
    for (Element s = 0; s < n; ++s)
      for (Element b = 0; b < n; ++b) {
        rows[t(q, s) * n + b].emplace_back(s * n + b, Rational(1));
        rows[b * n + t(s, q)].emplace_back(b * n + s, Rational(-1));
      }
    for (auto& row : rows)
      if (!row.empty()) system.add_equation(std::move(row), Rational(0));
  }

  auto result = system.solve();
  if (auto* bad = std::get_if<solve::Inconsistent>(&result)) {
    throw NotContractible("no_diagonal", "diagonal equations inconsistent at equation " + std::to_string(bad->row));
  }
  if (auto* many = std::get_if<solve::Underdetermined>(&result)) {
    throw NotContractible("diagonal_not_unique", "free coefficient d(" + std::to_string(many->free_column / n) + ", " +
                                                     std::to_string(many->free_column % n) + ")");
  }
  auto& x = std::get<solve::Unique>(result).x;
  Matrix d(n, n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) d(g, h) = std::move(x[g * n + h]);
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  return DiagonalTensor(table, std::move(order), std::move(d));
}

L1Vector unit_solve(const CliffordSemigroup& g) { return solve_unit(g.table_ptr()); }

DiagonalTensor diagonal_solve(const CliffordSemigroup& g) { return solve_diagonal(g.table_ptr(), unit_solve(g)); }

Rational am_constant(const CliffordSemigroup& g) { return amenability_constant(diagonal_solve(g)); }

DiagonalTensor collapse(const DiagonalTensor& d, const CliffordSemigroup& g) {
  if (!same_base(d.base(), g.table_ptr())) throw std::invalid_argument("collapse: diagonal is over a different base");
  const Semilattice& skel = g.skeleton();
  const auto& perm = skel.canonical_perm();
  const std::size_t n = skel.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
  Matrix m(n, n);
  for (Element x = 0; x < g.size(); ++x)
    for (Element y = 0; y < g.size(); ++y) {
      const Rational& c = d.at(x, y);
      if (!c.is_zero()) m(pos[g.block_of(x)], pos[g.block_of(y)]) += c;
    }
  return DiagonalTensor(skel.table_ptr(), perm, std::move(m));
}

}  // namespace amc
