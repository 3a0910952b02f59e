#ifndef AMC_SEMILATTICE_HPP
#define AMC_SEMILATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amc/semigroup_table.hpp"
#include "amc/validation.hpp"

namespace amc {

/// A validated finite semilattice: a commutative idempotent semigroup given by
/// its meet table, together with the order-theoretic data derived from it.
///
/// Element indices are those of the input table. The order is s <= t iff
/// meet(s, t) == s. Stripping maximal elements repeatedly gives the ideal chain
/// S_0 = S, S_{k+1} = S_k \ M(S_k), ending at S_{height()} = {minimum()}; an
/// element maximal in S_k sits at level height() - k.
///
/// Instances are immutable and cheap to copy (the table is shared).
class Semilattice {
 public:
  std::size_t size() const { return table_->size(); }
  Element meet(Element a, Element b) const { return (*table_)(a, b); }
  bool leq(Element a, Element b) const { return leq_[a * size() + b] != 0; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }

  Element minimum() const { return minimum_; }
  /// n(S): index of the last nonempty ideal in the chain.
  std::size_t height() const { return ideal_chain_.size() - 1; }
  std::size_t level(Element s) const { return levels_[s]; }
  const std::vector<std::size_t>& levels() const { return levels_; }
  const std::vector<std::vector<Element>>& ideal_chain() const { return ideal_chain_; }
  /// Covering pairs (s, t): s > t with nothing strictly between.
  const std::vector<std::pair<Element, Element>>& hasse_edges() const { return hasse_edges_; }
  /// Elements sorted by level, ties by index. Position 0 holds the minimum and
  /// every ideal of the chain is a prefix.
  const std::vector<Element>& canonical_perm() const { return canonical_perm_; }
  /// M(S).
  const std::vector<Element>& maximal() const { return top_layer_; }

  bool is_unital() const { return top_layer_.size() == 1; }
  std::optional<Element> unit_element() const {
    return is_unital() ? std::optional<Element>(top_layer_.front()) : std::nullopt;
  }

  const SemigroupTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  std::string label(Element e) const { return table_->label(e); }

  /// Meet table as nested rows.
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const Semilattice& a, const Semilattice& b) { return *a.table_ == *b.table_; }

 private:
  explicit Semilattice(SemigroupTable table);

  friend Validated<Semilattice> validate_meet_table(const std::vector<std::vector<std::int64_t>>&,
                                                    std::vector<std::string>);

  TablePtr table_;
  std::vector<unsigned char> leq_;
  Element minimum_ = 0;
  std::vector<std::size_t> levels_;
  std::vector<std::vector<Element>> ideal_chain_;
  std::vector<Element> top_layer_;
  std::vector<std::pair<Element, Element>> hasse_edges_;
  std::vector<Element> canonical_perm_;
};

/// Checks closure, idempotency, commutativity and associativity of a raw
/// table and derives the order data. Each violated axiom is reported once,
/// with its first witness in index order.
Validated<Semilattice> validate_meet_table(const std::vector<std::vector<std::int64_t>>& raw,
                                           std::vector<std::string> labels = {});

/// Builds a semilattice from order relations (s, t) meaning s > t. The order
/// is the reflexive-transitive closure of the edges; every pair must then have
/// a unique greatest lower bound. Reports the first failing pair.
Validated<Semilattice> from_hasse(std::size_t n, const std::vector<std::pair<std::int64_t, std::int64_t>>& edges,
                                  std::vector<std::string> labels = {});

/// Maximal elements of `subset` under the order of `s`.
/// Throws std::invalid_argument if the subset is empty.
std::vector<Element> maximal_elements(const Semilattice& s, std::span<const Element> subset);

/// Componentwise meet on pairs; (a, b) has index a * right.size() + b.
Semilattice product(const Semilattice& left, const Semilattice& right);

/// s -> {t : t <= s}, each set sorted ascending.
std::vector<std::vector<Element>> cayley_embed(const Semilattice& s);

/// The semilattice with element `old_of_new[i]` of `s` renamed to i.
Semilattice relabel(const Semilattice& s, std::span<const Element> old_of_new);

/// Bijection phi with phi(meet_S(a, b)) = meet_T(phi(a), phi(b)), as
/// phi[a] for each element a of `s`, or nullopt when none exists.
std::optional<std::vector<Element>> find_isomorphism(const Semilattice& s, const Semilattice& t);

inline bool are_isomorphic(const Semilattice& s, const Semilattice& t) { return find_isomorphism(s, t).has_value(); }

struct CanonicalForm {
  Semilattice semilattice;        // relabeled so that isomorphic inputs give equal tables
  std::vector<Element> old_of_new;
  std::string code;               // order relation bits in canonical order
};

/// Lexicographically least order-relation code over all labelings that list
/// elements by their isomorphism invariants.
CanonicalForm canonical_form(const Semilattice& s);

}  // namespace amc

#endif  // AMC_SEMILATTICE_HPP
