#include "amc/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "amc/diagonal.hpp"
#include "amc/moebius.hpp"

namespace amc {

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

// Runs body(i) for i in [0, count) on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

void insert_class(std::map<std::string, Semilattice>& classes, const Semilattice& s) {
  CanonicalForm cf = canonical_form(s);
  classes.try_emplace(cf.code, std::move(cf.semilattice));
}

std::vector<Semilattice> poset_space(std::size_t n) {
  std::map<std::string, Semilattice> classes;
  // Relation bits for pairs 1 <= i < j < n; 0 lies below everything.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<unsigned char> below(n * n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(below.begin(), below.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      below[a * n + a] = 1;
      below[0 * n + a] = 1;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) below[pairs[k].first * n + pairs[k].second] = 1;

    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = a + 1; b < n && transitive; ++b) {
        if (!below[a * n + b]) continue;
        for (std::size_t c = b + 1; c < n; ++c)
          if (below[b * n + c] && !below[a * n + c]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;

    Table meet(n, std::vector<std::int64_t>(n, -1));
    bool lattice = true;
    for (std::size_t a = 0; a < n && lattice; ++a)
      for (std::size_t b = a; b < n && lattice; ++b) {
        // Greatest common lower bound; lower bounds have smaller indices.
        std::int64_t best = -1;
        for (std::size_t c = std::min(a, b) + 1; c-- > 0;) {
          if (!below[c * n + a] || !below[c * n + b]) continue;
          if (best < 0) {
            best = static_cast<std::int64_t>(c);
          } else if (!below[c * n + static_cast<std::size_t>(best)]) {
            lattice = false;
            break;
          }
        }
        meet[a][b] = meet[b][a] = best;
      }
    if (!lattice) continue;
    auto v = validate_meet_table(meet);
    if (v) insert_class(classes, *v);
  }

  std::vector<Semilattice> out;
  for (auto& [code, s] : classes) out.push_back(s);
  return out;
}

std::vector<Semilattice> extend(const std::vector<Semilattice>& smaller) {
  std::map<std::string, Semilattice> classes;
  for (const Semilattice& s : smaller) {
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      auto in = [&](Element x) { return (mask >> x & 1) != 0; };
      bool down_set = true;
      for (Element x = 0; x < k && down_set; ++x)
        for (Element y = 0; y < k && down_set; ++y)
          if (in(x) && s.leq(y, x) && !in(y)) down_set = false;
      if (!down_set) continue;

      // The new element m meets x in the largest member of D below x.
      std::vector<std::int64_t> with_new(k);
      bool admissible = true;
      for (Element x = 0; x < k && admissible; ++x) {
        std::vector<Element> cut;
        for (Element y = 0; y < k; ++y)
          if (in(y) && s.leq(y, x)) cut.push_back(y);
        if (cut.empty()) {
          admissible = false;
          break;
        }
        auto top = maximal_elements(s, cut);
        if (top.size() != 1) admissible = false;
        else with_new[x] = static_cast<std::int64_t>(top.front());
      }
      if (!admissible) continue;

      Table t(k + 1, std::vector<std::int64_t>(k + 1));
      for (Element a = 0; a < k; ++a)
        for (Element b = 0; b < k; ++b) t[a][b] = static_cast<std::int64_t>(s.meet(a, b));
      for (Element x = 0; x < k; ++x) t[k][x] = t[x][k] = with_new[x];
      t[k][k] = static_cast<std::int64_t>(k);
      auto v = validate_meet_table(t);
      if (v) insert_class(classes, *v);
    }
  }
  std::vector<Semilattice> out;
  for (auto& [code, s] : classes) out.push_back(s);
  return out;
}

Semilattice singleton() { return validate_meet_table({{0}}).value(); }

}  // namespace

std::vector<Semilattice> enumerate_semilattices(std::size_t n, EnumerationStrategy strategy, std::size_t ceiling) {
  if (n < 1 || n > ceiling || ceiling > kMaxEnumerationSize) {
    throw std::out_of_range("enumerate_semilattices: size " + std::to_string(n) + " outside 1.." +
                            std::to_string(std::min(ceiling, kMaxEnumerationSize)));
  }
  if (n == 1) return {canonical_form(singleton()).semilattice};
  if (strategy == EnumerationStrategy::PosetSpace) return poset_space(n);
  std::vector<Semilattice> level{canonical_form(singleton()).semilattice};
  for (std::size_t k = 2; k <= n; ++k) level = extend(level);
  return level;
}

std::vector<SpectrumReport> spectrum(std::size_t n_max, const SpectrumOptions& options) {
  std::vector<SpectrumReport> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto classes = enumerate_semilattices(n);
    std::vector<std::optional<ClassRecord>> slots(classes.size());
    parallel_for(classes.size(), options.workers, [&](std::size_t i) {
      const Semilattice& s = classes[i];
      const DiagonalTensor rec = diagonal_recursive(s);
      const DiagonalTensor mob = diagonal_via_mobius(s);
      if (!same_coefficients(rec, mob)) {
        throw OracleMismatch("size " + std::to_string(n) + " class " + std::to_string(i) +
                             ": recursive and Moebius diagonals differ");
      }
      if (options.with_solver) {
        const CliffordSemigroup g = trivial_clifford(s);
        const DiagonalTensor sol = collapse(diagonal_solve(g), g);
        if (!same_coefficients(rec, sol)) {
          throw OracleMismatch("size " + std::to_string(n) + " class " + std::to_string(i) +
                               ": recursive and solver diagonals differ");
        }
      }
      const Rational am = amenability_constant(rec);
      const auto size = static_cast<long>(n);
      slots[i] = ClassRecord{i,
                             s,
                             am,
                             am.mod(4),
                             am - Rational(2 * size - 1),
                             am >= Rational(2 * size - 1),
                             am <= Rational(4 * size - 3),
                             s.is_unital()};
    });
    SpectrumReport report;
    report.size = n;
    report.count = classes.size();
    for (auto& r : slots) report.records.push_back(std::move(*r));
    out.push_back(std::move(report));
  }
  return out;
}

std::string GapInstance::describe() const {
  std::ostringstream os;
  os << "skeleton=[";
  const auto rows = skeleton.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
    os << "]";
  }
  os << "] orders=[";
  for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
  os << "] homs=[";
  for (std::size_t i = 0; i < cover_homs.size(); ++i) {
    const auto& h = cover_homs[i];
    os << (i ? "," : "") << h.from << "->" << h.to << ":" << h.gen_images.at(0).at(0);
  }
  os << "]";
  return os.str();
}

namespace {

// Images k in Z_b of the generator of Z_a that define a homomorphism.
std::vector<std::uint32_t> hom_images(std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < b; ++k)
    if (static_cast<std::uint64_t>(a) * k % b == 0) out.push_back(k);
  return out;
}

struct Family {
  std::vector<Semilattice> skeletons;
};

Family gap_family(const GapSearchConfig& config) {
  if (config.skeleton_max_size < 1 || config.skeleton_max_size > kMaxEnumerationSize)
    throw std::out_of_range("gap_search: skeleton size outside 1.." + std::to_string(kMaxEnumerationSize));
  if (config.max_cyclic_order < 1) throw std::out_of_range("gap_search: cyclic order must be positive");
  Family f;
  for (std::size_t k = 1; k <= config.skeleton_max_size; ++k)
    for (auto& s : enumerate_semilattices(k)) f.skeletons.push_back(std::move(s));
  return f;
}

// Calls visit(orders) for every assignment of cyclic orders 1..max.
void for_each_orders(std::size_t k, std::uint32_t max, const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  std::vector<std::uint32_t> orders(k, 1);
  while (true) {
    visit(orders);
    std::size_t i = 0;
    while (i < k && orders[i] == max) orders[i++] = 1;
    if (i == k) return;
    ++orders[i];
  }
}

std::size_t hom_choices(const Semilattice& s, const std::vector<std::uint32_t>& orders, bool nontrivial) {
  if (!nontrivial) return 1;
  std::size_t total = 1;
  for (auto [from, to] : s.hasse_edges()) total *= hom_images(orders[from], orders[to]).size();
  return total;
}

}  // namespace

std::size_t gap_search_candidates(const GapSearchConfig& config) {
  const Family f = gap_family(config);
  std::size_t total = 0;
  for (const auto& s : f.skeletons)
    for_each_orders(s.size(), config.max_cyclic_order,
                    [&](const std::vector<std::uint32_t>& o) { total += hom_choices(s, o, config.nontrivial_homs); });
  return total;
}

std::vector<GapInstance> gap_family_instances(const GapSearchConfig& config) {
  const Family f = gap_family(config);
  std::vector<GapInstance> candidates;
  for (const auto& s : f.skeletons) {
    const auto& edges = s.hasse_edges();
    for_each_orders(s.size(), config.max_cyclic_order, [&](const std::vector<std::uint32_t>& orders) {
      std::vector<std::vector<std::uint32_t>> choices;
      for (auto [from, to] : edges)
        choices.push_back(config.nontrivial_homs ? hom_images(orders[from], orders[to])
                                                 : std::vector<std::uint32_t>{0});
      std::vector<std::size_t> pick(edges.size(), 0);
      while (true) {
        if (candidates.size() >= config.max_instances) {
          throw SearchTooLarge("gap_search: more than " + std::to_string(config.max_instances) +
                               " candidates; raise the limit or shrink the family");
        }
        GapInstance inst{s, orders, {}};
        for (std::size_t e = 0; e < edges.size(); ++e)
          inst.cover_homs.push_back({edges[e].first, edges[e].second, {{choices[e][pick[e]]}}});
        candidates.push_back(std::move(inst));
        std::size_t i = 0;
        while (i < pick.size() && pick[i] + 1 == choices[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
        ++pick[i];
      }
    });
  }
  return candidates;
}

std::optional<CliffordSemigroup> build_instance(const GapInstance& inst) {
  const Semilattice& s = inst.skeleton;
  std::vector<FiniteAbelianGroup> groups;
  for (auto o : inst.orders) groups.push_back(FiniteAbelianGroup::cyclic(o));

  // A hom Z_a -> Z_b is multiplication by the generator image; composites
  // multiply. Sources are visited upward so every lower composite exists.
  std::map<std::pair<Element, Element>, std::uint64_t> mult;
  for (Element a = 0; a < s.size(); ++a) mult[{a, a}] = 1;
  const auto& by_level = s.canonical_perm();
  for (Element from : by_level) {
    for (Element to : by_level) {
      if (!s.less(to, from)) continue;
      for (const auto& h : inst.cover_homs) {
        if (h.from != from || !s.leq(to, h.to)) continue;
        const auto below = mult.find({h.to, to});
        if (below == mult.end()) continue;
        mult[{from, to}] = static_cast<std::uint64_t>(h.gen_images.at(0).at(0)) * below->second % inst.orders[to];
        break;
      }
    }
  }
  std::vector<ConnectingHom> homs;
  for (auto& [key, m] : mult) {
    if (key.first == key.second) continue;
    homs.push_back({key.first, key.second, {{static_cast<std::uint32_t>(m)}}});
  }
  auto built = build_clifford(s, std::move(groups), std::move(homs));
  if (!built) return std::nullopt;
  return std::move(built).value();
}

GapSearchReport gap_search(const GapSearchConfig& config) {
  GapSearchReport report;
  report.config = config;
  report.skeletons = gap_family(config).skeletons.size();
  const std::vector<GapInstance> candidates = gap_family_instances(config);
  report.candidates = candidates.size();

  std::vector<std::optional<Rational>> results(candidates.size());
  parallel_for(candidates.size(), config.workers, [&](std::size_t idx) {
    if (auto g = build_instance(candidates[idx])) results[idx] = am_constant(*g);
  });

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!results[i]) {
      ++report.rejected;
      continue;
    }
    const Rational& am = *results[i];
    ++report.instances;
    ++report.am_counts[am];
    if (am > Rational(5)) {
      if (!report.min_above_five || am < *report.min_above_five) report.min_above_five = am;
      if (am < Rational(9)) report.in_gap.emplace_back(candidates[i], am);
    }
  }
  return report;
}

}  // namespace amc
