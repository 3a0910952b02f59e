#include "amc/families.hpp"

#include <stdexcept>
#include <string>

namespace amc::families {

namespace {

using Raw = std::vector<std::vector<std::int64_t>>;

Raw square(std::size_t n) { return Raw(n, std::vector<std::int64_t>(n, 0)); }

}  // namespace

Semilattice chain(std::size_t n) {
  Raw t = square(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) t[i][j] = static_cast<std::int64_t>(std::min(i, j));
  return validate_meet_table(t).value();
}

Semilattice flat(std::size_t n) {
  Raw t = square(n + 1);
  for (std::size_t i = 1; i <= n; ++i) t[i][i] = static_cast<std::int64_t>(i);
  std::vector<std::string> labels{"o"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
  return validate_meet_table(t, labels).value();
}

Semilattice unitized_flat(std::size_t n) {
  const auto top = static_cast<std::int64_t>(n + 1);
  Raw t = square(n + 2);
  for (std::size_t i = 1; i <= n; ++i) t[i][i] = static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    t[n + 1][i] = static_cast<std::int64_t>(i);
    t[i][n + 1] = static_cast<std::int64_t>(i);
  }
  t[n + 1][n + 1] = top;
  std::vector<std::string> labels{"o"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
  labels.push_back("1");
  return validate_meet_table(t, labels).value();
}

Semilattice powerset(std::size_t n) {
  if (n > 10) throw std::invalid_argument("powerset: n too large");
  const std::size_t size = std::size_t{1} << n;
  Raw t = square(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) t[i][j] = static_cast<std::int64_t>(i & j);
  return validate_meet_table(t).value();
}

Semilattice six_element() {
  return from_hasse(6, {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {4, 0}, {5, 3}, {5, 4}}, {"o", "s1", "s2", "s3", "s4", "1"})
      .value();
}

}  // namespace amc::families
