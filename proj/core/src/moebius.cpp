#include "amc/moebius.hpp"

#include <stdexcept>
#include <string>

namespace amc {

MobiusTable::MobiusTable(const Semilattice& s) : n_(s.size()), values_(n_ * n_, 0), defined_(n_ * n_, 0) {
  // Intervals [t, s] are processed by increasing size so that every
  // mu(t, r) with r < s is known when mu(t, s) is needed.
  const auto& perm = s.canonical_perm();
  for (Element t = 0; t < n_; ++t) {
    for (Element sv : perm) {
      if (!s.leq(t, sv)) continue;
      std::int64_t v = 0;
      if (sv == t) {
        v = 1;
      } else {
        for (Element r = 0; r < n_; ++r)
          if (s.leq(t, r) && s.less(r, sv)) v -= values_[t * n_ + r];
      }
      values_[t * n_ + sv] = v;
      defined_[t * n_ + sv] = 1;
    }
  }
}

std::int64_t MobiusTable::mu(Element t, Element s) const {
  if (!defined(t, s)) {
    throw std::domain_error("mu(" + std::to_string(t) + ", " + std::to_string(s) + ") undefined: not t <= s");
  }
  return values_[t * n_ + s];
}

MobiusTable mobius_table(const Semilattice& s) { return MobiusTable(s); }

namespace {

void require_base(const Semilattice& s, const L1Vector& x) {
  if (!same_base(s.table_ptr(), x.base())) throw std::invalid_argument("schutzenberger: vector is over a different base");
}

}  // namespace

PointFunction schutzenberger(const Semilattice& s, const L1Vector& x) {
  require_base(s, x);
  PointFunction f(s.size());
  for (Element t = 0; t < s.size(); ++t)
    for (Element v = 0; v < s.size(); ++v)
      if (s.leq(t, v)) f[t] += x[v];
  return f;
}

L1Vector schutzenberger_inverse(const Semilattice& s, const PointFunction& f) {
  if (f.size() != s.size()) throw std::invalid_argument("schutzenberger_inverse: function has wrong length");
  const MobiusTable mu(s);
  L1Vector x(s.table_ptr());
  for (Element v = 0; v < s.size(); ++v) {
    if (f[v].is_zero()) continue;
    for (Element t = 0; t < s.size(); ++t)
      if (mu.defined(t, v)) x[t] += f[v] * Rational(static_cast<long>(mu.extended(t, v)));
  }
  return x;
}

L1Vector unit_via_schutzenberger(const Semilattice& s) {
  return schutzenberger_inverse(s, PointFunction(s.size(), Rational(1)));
}

DiagonalTensor diagonal_via_mobius(const Semilattice& s) {
  const std::size_t n = s.size();
  const MobiusTable mu(s);
  const auto& perm = s.canonical_perm();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t sum = 0;
      for (Element r = 0; r < n; ++r) sum += mu.extended(perm[i], r) * mu.extended(perm[j], r);
      d(i, j) = Rational(static_cast<long>(sum));
    }
  return DiagonalTensor(s.table_ptr(), perm, std::move(d));
}

}  // namespace amc
