#ifndef AMC_CLIFFORD_HPP
#define AMC_CLIFFORD_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amc/diagonal.hpp"
#include "amc/semilattice.hpp"
#include "amc/validation.hpp"

namespace amc {

/// Z_{n_1} x ... x Z_{n_k}; elements are residue tuples, listed in
/// lexicographic order (the identity first). No factors means the trivial group.
class FiniteAbelianGroup {
 public:
  using Tuple = std::vector<std::uint32_t>;

  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::uint32_t>{}) {}
  /// Throws std::invalid_argument for a zero order or an order product above 4096.
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> cyclic_orders);

  static FiniteAbelianGroup cyclic(std::uint32_t n) { return FiniteAbelianGroup({n}); }

  const std::vector<std::uint32_t>& cyclic_orders() const { return orders_; }
  std::size_t factors() const { return orders_.size(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Tuple>& elements() const { return elements_; }
  std::size_t index_of(const Tuple& x) const;

  Tuple identity() const { return Tuple(orders_.size(), 0); }
  Tuple add(const Tuple& a, const Tuple& b) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::vector<Tuple> elements_;
};

/// eta^from_to : G_from -> G_to for to <= from, given by the images of the
/// source's cyclic generators.
struct ConnectingHom {
  Element from = 0;
  Element to = 0;
  std::vector<FiniteAbelianGroup::Tuple> gen_images;

  FiniteAbelianGroup::Tuple apply(const FiniteAbelianGroup& target, const FiniteAbelianGroup::Tuple& x) const;
};

/// The map sending every generator to the identity.
ConnectingHom trivial_hom(Element from, Element to, const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);

/// Disjoint union of groups G_s over a semilattice skeleton with product
/// x_s y_t = eta^s_{st}(x_s) eta^t_{st}(y_t).
///
/// Flattened element order: blocks in the skeleton's canonical_perm() order,
/// each block in the group's element order (identity first).
class CliffordSemigroup {
 public:
  const Semilattice& skeleton() const { return skeleton_; }
  const FiniteAbelianGroup& group(Element s) const { return groups_[s]; }
  const std::vector<FiniteAbelianGroup>& groups() const { return groups_; }
  std::size_t size() const { return block_of_.size(); }

  Element block_of(Element g) const { return block_of_[g]; }
  const FiniteAbelianGroup::Tuple& residues(Element g) const { return groups_[block_of_[g]].elements()[offset_in_block_[g]]; }
  Element element(Element s, const FiniteAbelianGroup::Tuple& x) const { return block_start_[s] + groups_[s].index_of(x); }
  Element identity_of(Element s) const { return block_start_[s]; }
  /// Flattened indices of G_s.
  std::vector<Element> block(Element s) const;

  /// eta^from_to; identity when from == to. Throws std::out_of_range if to is not <= from.
  const ConnectingHom& hom(Element from, Element to) const;

  const SemigroupTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  std::string label(Element g) const { return table_->label(g); }

 private:
  explicit CliffordSemigroup(Semilattice skeleton) : skeleton_(std::move(skeleton)) {}
  friend Validated<CliffordSemigroup> build_clifford(const Semilattice&, std::vector<FiniteAbelianGroup>,
                                                     std::vector<ConnectingHom>);

  Semilattice skeleton_;
  std::vector<FiniteAbelianGroup> groups_;
  std::map<std::pair<Element, Element>, ConnectingHom> homs_;
  std::vector<Element> block_start_;
  std::vector<Element> block_of_;
  std::vector<std::size_t> offset_in_block_;
  TablePtr table_;
};

/// Validates the data (one group per skeleton element, one homomorphism per
/// comparable pair t < s, identity maps on the diagonal, transitivity
/// eta^s_t o eta^r_s = eta^r_t) and builds the product table, which is then
/// checked exhaustively for commutativity, associativity and that its
/// idempotents are exactly the group identities.
Validated<CliffordSemigroup> build_clifford(const Semilattice& skeleton, std::vector<FiniteAbelianGroup> groups,
                                            std::vector<ConnectingHom> homs);

/// Trivial groups everywhere: the skeleton itself, relabeled in canonical order.
CliffordSemigroup trivial_clifford(const Semilattice& skeleton);

/// Trivial homomorphisms for every strictly comparable pair.
std::vector<ConnectingHom> trivial_homs(const Semilattice& skeleton, const std::vector<FiniteAbelianGroup>& groups);

inline const SemigroupTable& semigroup_table(const CliffordSemigroup& g) { return g.table(); }

/// Raised when the algebra of a table has no unit or no unique diagonal.
class NotContractible : public std::runtime_error {
 public:
  NotContractible(std::string reason, std::string detail)
      : std::runtime_error(reason + ": " + detail), reason_(std::move(reason)) {}
  /// "not_unital", "no_diagonal" or "diagonal_not_unique".
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

/// Solves u * delta_g = delta_g for all g. Throws NotContractible.
L1Vector solve_unit(const TablePtr& table);

/// Solves m(D) = u together with delta_q . D = D . delta_q for every basis
/// element q, with d(g, h) as |G|^2 unknowns. The solution must be unique.
/// Throws NotContractible. The result is stored in base index order.
DiagonalTensor solve_diagonal(const TablePtr& table, const L1Vector& u);

L1Vector unit_solve(const CliffordSemigroup& g);
DiagonalTensor diagonal_solve(const CliffordSemigroup& g);
Rational am_constant(const CliffordSemigroup& g);

/// Pushes D_G through the blockwise augmentation: entry (s, t) is the sum of
/// d(g, h) over g in G_s, h in G_t. Result is over the skeleton, in its
/// canonical order.
DiagonalTensor collapse(const DiagonalTensor& d, const CliffordSemigroup& g);

}  // namespace amc

#endif  // AMC_CLIFFORD_HPP
