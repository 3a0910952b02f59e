#ifndef AMC_SEMIGROUP_TABLE_HPP
#define AMC_SEMIGROUP_TABLE_HPP

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace amc {

using Element = std::size_t;

/// Multiplication table of a finite semigroup on elements 0..n-1.
/// Semilattices and Clifford semigroups both expose one of these; the
/// algebra-level code (convolution, diagonals) only needs the table.
class SemigroupTable {
 public:
  SemigroupTable() = default;
  SemigroupTable(std::size_t n, std::vector<Element> products, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  Element operator()(Element a, Element b) const { return products_[a * n_ + b]; }

  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of `e`, or its index when unlabeled.
  std::string label(Element e) const;

  std::optional<std::pair<Element, Element>> find_noncommuting() const;
  std::optional<std::array<Element, 3>> find_nonassociative() const;

  friend bool operator==(const SemigroupTable& a, const SemigroupTable& b) {
    return a.n_ == b.n_ && a.products_ == b.products_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Element> products_;
  std::vector<std::string> labels_;
};

using TablePtr = std::shared_ptr<const SemigroupTable>;

/// Same table (pointer identity or equal products).
bool same_base(const TablePtr& a, const TablePtr& b);

/// Direct product; element (a, b) has index a * right.size() + b.
SemigroupTable product_table(const SemigroupTable& left, const SemigroupTable& right);

}  // namespace amc

#endif  // AMC_SEMIGROUP_TABLE_HPP
