#ifndef AMC_ENUMERATION_HPP
#define AMC_ENUMERATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amc/clifford.hpp"
#include "amc/rational.hpp"
#include "amc/semilattice.hpp"

namespace amc {

inline constexpr std::size_t kMaxEnumerationSize = 7;

enum class EnumerationStrategy {
  /// Orders on 0..n-1 with 0 as the minimum and i < j whenever i is below j,
  /// filtered to those where every pair has a meet.
  PosetSpace,
  /// Every class of size n-1 extended by a new maximal element over each
  /// admissible down-set.
  Extension,
};

/// One canonical representative per isomorphism class of n-element
/// semilattices, sorted by canonical code. Throws std::out_of_range unless
/// 1 <= n <= ceiling.
std::vector<Semilattice> enumerate_semilattices(std::size_t n,
                                                EnumerationStrategy strategy = EnumerationStrategy::PosetSpace,
                                                std::size_t ceiling = kMaxEnumerationSize);

struct ClassRecord {
  std::size_t class_id = 0;
  Semilattice semilattice;
  Rational am;
  std::int64_t mod4 = 0;
  /// AM - (2|S| - 1).
  Rational slack_2s_minus_1;
  bool meets_2s_minus_1 = false;
  bool meets_4s_minus_3 = false;
  bool unital = false;
};

struct SpectrumReport {
  std::size_t size = 0;
  std::size_t count = 0;
  std::vector<ClassRecord> records;
};

struct SpectrumOptions {
  /// Also solve each class as a trivial-groups Clifford semigroup.
  bool with_solver = false;
  unsigned workers = 1;
};

/// Two independent computations of the same quantity disagreed.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// For every class of each size 1..n_max: the diagonal by recursion and by
/// Moebius inversion (and optionally by the linear solver), which must agree
/// entrywise, and the resulting constant with its bound checks.
/// Throws OracleMismatch on disagreement.
std::vector<SpectrumReport> spectrum(std::size_t n_max, const SpectrumOptions& options = {});

struct GapSearchConfig {
  std::size_t skeleton_max_size = 3;
  std::uint32_t max_cyclic_order = 4;
  /// Enumerate every homomorphism between cyclic components along covering
  /// pairs; otherwise only trivial ones.
  bool nontrivial_homs = true;
  std::size_t max_instances = 200000;
  unsigned workers = 1;
};

struct GapInstance {
  Semilattice skeleton;
  std::vector<std::uint32_t> orders;               // by skeleton element
  std::vector<ConnectingHom> cover_homs;           // along hasse edges
  std::string describe() const;
};

struct GapSearchReport {
  GapSearchConfig config;
  std::size_t skeletons = 0;
  std::size_t candidates = 0;
  std::size_t rejected = 0;  // hom systems failing transitivity
  std::size_t instances = 0;
  std::map<Rational, std::size_t> am_counts;
  std::vector<std::pair<GapInstance, Rational>> in_gap;
  std::optional<Rational> min_above_five;

  bool ok() const { return in_gap.empty(); }
};

class SearchTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of (skeleton, orders, cover homomorphisms) candidates in the family.
std::size_t gap_search_candidates(const GapSearchConfig& config);

/// The candidates themselves, in report order. Throws SearchTooLarge.
std::vector<GapInstance> gap_family_instances(const GapSearchConfig& config);

/// Extends the cover homomorphisms to every comparable pair by composing
/// along paths and builds the semigroup; nullopt when the composites are
/// inconsistent.
std::optional<CliffordSemigroup> build_instance(const GapInstance& instance);

/// Every Clifford semigroup in the configured family: skeletons up to the given
/// size, one cyclic group of order 1..max_cyclic_order per skeleton element,
/// and homomorphisms chosen along covering pairs (composites follow). Each
/// AM(G) is computed exactly. Throws SearchTooLarge when the candidate count
/// exceeds config.max_instances.
GapSearchReport gap_search(const GapSearchConfig& config);

}  // namespace amc

#endif  // AMC_ENUMERATION_HPP
