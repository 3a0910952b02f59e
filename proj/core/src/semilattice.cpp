#include "amc/semilattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace amc {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].axiom << " at (";
    for (std::size_t j = 0; j < violations[i].witness.size(); ++j) os << (j ? "," : "") << violations[i].witness[j];
    os << ")";
  }
  return os.str();
}

Semilattice::Semilattice(SemigroupTable table) : table_(std::make_shared<const SemigroupTable>(std::move(table))) {
  const std::size_t n = table_->size();
  leq_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) leq_[a * n + b] = meet(a, b) == a ? 1 : 0;

  minimum_ = 0;
  for (Element a = 1; a < n; ++a) minimum_ = meet(minimum_, a);

  std::vector<Element> current(n);
  std::iota(current.begin(), current.end(), Element{0});
  std::vector<std::vector<Element>> layers;
  while (!current.empty()) {
    ideal_chain_.push_back(current);
    std::vector<Element> top = maximal_elements(*this, current);
    std::vector<Element> rest;
    for (Element e : current)
      if (!std::binary_search(top.begin(), top.end(), e)) rest.push_back(e);
    layers.push_back(std::move(top));
    current = std::move(rest);
  }
  top_layer_ = layers.front();

  levels_.assign(n, 0);
  const std::size_t h = ideal_chain_.size() - 1;
  for (std::size_t k = 0; k < layers.size(); ++k)
    for (Element e : layers[k]) levels_[e] = h - k;

  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) {
      if (!less(t, s)) continue;
      bool cover = true;
      for (Element r = 0; r < n && cover; ++r)
        if (less(t, r) && less(r, s)) cover = false;
      if (cover) hasse_edges_.emplace_back(s, t);
    }

  canonical_perm_.resize(n);
  std::iota(canonical_perm_.begin(), canonical_perm_.end(), Element{0});
  std::stable_sort(canonical_perm_.begin(), canonical_perm_.end(),
                   [this](Element a, Element b) { return levels_[a] < levels_[b]; });
}

std::vector<std::vector<Element>> Semilattice::rows() const {
  std::vector<std::vector<Element>> out(size(), std::vector<Element>(size()));
  for (Element a = 0; a < size(); ++a)
    for (Element b = 0; b < size(); ++b) out[a][b] = meet(a, b);
  return out;
}

Validated<Semilattice> validate_meet_table(const std::vector<std::vector<std::int64_t>>& raw,
                                           std::vector<std::string> labels) {
  using W = std::int64_t;
  ValidationReport report;
  const std::size_t n = raw.size();
  if (n == 0) {
    report.add("square", {0, 0});
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      report.add("square", {static_cast<W>(i), static_cast<W>(raw[i].size())});
      return report;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (raw[i][j] < 0 || static_cast<std::size_t>(raw[i][j]) >= n) {
        report.add("range", {static_cast<W>(i), static_cast<W>(j), raw[i][j]});
        return report;
      }
  if (!labels.empty() && labels.size() != n) {
    report.add("labels", {static_cast<W>(labels.size())});
    return report;
  }

  std::vector<Element> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = static_cast<Element>(raw[i][j]);
  SemigroupTable table(n, std::move(products), std::move(labels));

  for (Element i = 0; i < n; ++i)
    if (table(i, i) != i) {
      report.add("idempotent", {static_cast<W>(i)});
      break;
    }
  if (auto w = table.find_noncommuting()) report.add("commutative", {static_cast<W>(w->first), static_cast<W>(w->second)});
  if (auto w = table.find_nonassociative())
    report.add("associative", {static_cast<W>((*w)[0]), static_cast<W>((*w)[1]), static_cast<W>((*w)[2])});
  if (!report.ok()) return report;
  return Semilattice(std::move(table));
}

Validated<Semilattice> from_hasse(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                                  std::vector<std::string> labels) {
  using W = std::int64_t;
  ValidationReport report;
  if (n == 0) {
    report.add("square", {0, 0});
    return report;
  }
  // above[s][t]: s > t
  std::vector<std::vector<char>> above(n, std::vector<char>(n, 0));
  for (const auto& [s, t] : edges) {
    if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= n || static_cast<std::size_t>(t) >= n) {
      report.add("range", {s, t});
      return report;
    }
    if (s == t) {
      report.add("cycle", {s});
      return report;
    }
    above[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (above[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (above[k][j]) above[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (above[i][i]) {
      report.add("cycle", {static_cast<W>(i)});
      return report;
    }

  auto leq = [&](std::size_t a, std::size_t b) { return a == b || above[b][a]; };
  std::vector<std::vector<std::int64_t>> table(n, std::vector<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::vector<std::size_t> lower;
      for (std::size_t c = 0; c < n; ++c)
        if (leq(c, a) && leq(c, b)) lower.push_back(c);
      if (lower.empty()) {
        report.add("no_lower_bound", {static_cast<W>(a), static_cast<W>(b)});
        return report;
      }
      std::vector<std::size_t> greatest;
      for (std::size_t c : lower) {
        bool maximal = true;
        for (std::size_t d : lower)
          if (d != c && leq(c, d)) maximal = false;
        if (maximal) greatest.push_back(c);
      }
      if (greatest.size() != 1) {
        report.add("ambiguous_meet",
                   {static_cast<W>(a), static_cast<W>(b), static_cast<W>(greatest[0]), static_cast<W>(greatest[1])});
        return report;
      }
      table[a][b] = table[b][a] = static_cast<std::int64_t>(greatest.front());
    }
  return validate_meet_table(table, std::move(labels));
}

std::vector<Element> maximal_elements(const Semilattice& s, std::span<const Element> subset) {
  if (subset.empty()) throw std::invalid_argument("maximal_elements: empty subset");
  std::vector<Element> out;
  for (Element a : subset) {
    bool maximal = true;
    for (Element b : subset)
      if (s.less(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<std::vector<std::int64_t>> to_raw(const SemigroupTable& t) {
  std::vector<std::vector<std::int64_t>> raw(t.size(), std::vector<std::int64_t>(t.size()));
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b) raw[a][b] = static_cast<std::int64_t>(t(a, b));
  return raw;
}

// Isomorphism invariants: level, down-set size, up-set size, upper and lower
// cover counts.
using Invariant = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Invariant> invariants(const Semilattice& s) {
  const std::size_t n = s.size();
  std::vector<Invariant> inv(n);
  std::vector<std::size_t> up_covers(n, 0), down_covers(n, 0);
  for (const auto& [hi, lo] : s.hasse_edges()) {
    ++down_covers[hi];
    ++up_covers[lo];
  }
  for (Element a = 0; a < n; ++a) {
    std::size_t down = 0, up = 0;
    for (Element b = 0; b < n; ++b) {
      down += s.leq(b, a) ? 1 : 0;
      up += s.leq(a, b) ? 1 : 0;
    }
    inv[a] = {s.level(a), down, up, up_covers[a], down_covers[a]};
  }
  return inv;
}

}  // namespace

Semilattice product(const Semilattice& left, const Semilattice& right) {
  SemigroupTable t = product_table(left.table(), right.table());
  std::vector<std::string> labels = t.labels();
  return validate_meet_table(to_raw(t), std::move(labels)).value();
}

std::vector<std::vector<Element>> cayley_embed(const Semilattice& s) {
  std::vector<std::vector<Element>> out(s.size());
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b)
      if (s.leq(b, a)) out[a].push_back(b);
  return out;
}

Semilattice relabel(const Semilattice& s, std::span<const Element> old_of_new) {
  const std::size_t n = s.size();
  if (old_of_new.size() != n) throw std::invalid_argument("relabel: permutation has wrong length");
  std::vector<Element> new_of_old(n, n);
  for (Element i = 0; i < n; ++i) {
    if (old_of_new[i] >= n || new_of_old[old_of_new[i]] != n) throw std::invalid_argument("relabel: not a permutation");
    new_of_old[old_of_new[i]] = i;
  }
  std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) raw[i][j] = static_cast<std::int64_t>(new_of_old[s.meet(old_of_new[i], old_of_new[j])]);
  std::vector<std::string> labels;
  if (!s.table().labels().empty())
    for (Element i = 0; i < n; ++i) labels.push_back(s.table().labels()[old_of_new[i]]);
  return validate_meet_table(raw, std::move(labels)).value();
}

std::optional<std::vector<Element>> find_isomorphism(const Semilattice& s, const Semilattice& t) {
  const std::size_t n = s.size();
  if (t.size() != n) return std::nullopt;
  const auto inv_s = invariants(s);
  const auto inv_t = invariants(t);
  {
    auto a = inv_s, b = inv_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::vector<Element>& order = s.canonical_perm();
  std::vector<Element> phi(n, n);
  std::vector<char> used(n, 0);

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Element a = order[depth];
    for (Element b = 0; b < n; ++b) {
      if (used[b] || inv_t[b] != inv_s[a]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Element c = order[k];
        consistent = s.leq(a, c) == t.leq(b, phi[c]) && s.leq(c, a) == t.leq(phi[c], b);
      }
      if (!consistent) continue;
      phi[a] = b;
      used[b] = 1;
      if (self(self, depth + 1)) return true;
      used[b] = 0;
    }
    phi[a] = n;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return phi;
}

CanonicalForm canonical_form(const Semilattice& s) {
  const std::size_t n = s.size();
  const auto inv = invariants(s);
  std::vector<Element> sorted(n);
  std::iota(sorted.begin(), sorted.end(), Element{0});
  std::stable_sort(sorted.begin(), sorted.end(), [&](Element a, Element b) { return inv[a] < inv[b]; });
  std::vector<Invariant> slot(n);
  for (std::size_t i = 0; i < n; ++i) slot[i] = inv[sorted[i]];

  // Code bits are emitted shell by shell: for position k, leq(p_k, p_j) for
  // j <= k, then leq(p_j, p_k) for j < k. A partial labeling fixes a prefix.
  std::string best, current;
  std::vector<Element> best_perm, perm;
  std::vector<char> used(n, 0);
  current.reserve(n * n);

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (best.empty() || current < best) {
        best = current;
        best_perm = perm;
      }
      return;
    }
    for (Element e = 0; e < n; ++e) {
      if (used[e] || inv[e] != slot[k]) continue;
      const std::size_t mark = current.size();
      perm.push_back(e);
      for (std::size_t j = 0; j <= k; ++j) current.push_back(s.leq(e, perm[j]) ? '1' : '0');
      for (std::size_t j = 0; j < k; ++j) current.push_back(s.leq(perm[j], e) ? '1' : '0');
      if (best.empty() || best.compare(0, current.size(), current) >= 0) {
        used[e] = 1;
        self(self, k + 1);
        used[e] = 0;
      }
      perm.pop_back();
      current.resize(mark);
    }
  };
  search(search, 0);
  return CanonicalForm{relabel(s, best_perm), best_perm, best};
}

}  // namespace amc
