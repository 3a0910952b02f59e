#include "amc/semigroup_table.hpp"

#include <array>
#include <stdexcept>

namespace amc {

SemigroupTable::SemigroupTable(std::size_t n, std::vector<Element> products, std::vector<std::string> labels)
    : n_(n), products_(std::move(products)), labels_(std::move(labels)) {
  if (products_.size() != n_ * n_) throw std::invalid_argument("semigroup table is not n x n");
  for (Element p : products_)
    if (p >= n_) throw std::invalid_argument("semigroup table entry out of range");
  if (!labels_.empty() && labels_.size() != n_) throw std::invalid_argument("label count differs from size");
}

std::string SemigroupTable::label(Element e) const {
  return labels_.empty() ? std::to_string(e) : labels_[e];
}

std::optional<std::pair<Element, Element>> SemigroupTable::find_noncommuting() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = a + 1; b < n_; ++b)
      if ((*this)(a, b) != (*this)(b, a)) return std::pair{a, b};
  return std::nullopt;
}

std::optional<std::array<Element, 3>> SemigroupTable::find_nonassociative() const {
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) {
      const Element ab = (*this)(a, b);
      for (Element c = 0; c < n_; ++c)
        if ((*this)(ab, c) != (*this)(a, (*this)(b, c))) return std::array{a, b, c};
    }
  return std::nullopt;
}

bool same_base(const TablePtr& a, const TablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

SemigroupTable product_table(const SemigroupTable& left, const SemigroupTable& right) {
  const std::size_t m = right.size();
  const std::size_t n = left.size() * m;
  std::vector<Element> products(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element a = 0; a < left.size(); ++a)
    for (Element b = 0; b < m; ++b) labels.push_back("(" + left.label(a) + "," + right.label(b) + ")");
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      products[x * n + y] = left(x / m, y / m) * m + right(x % m, y % m);
  return SemigroupTable(n, std::move(products), std::move(labels));
}

}  // namespace amc
