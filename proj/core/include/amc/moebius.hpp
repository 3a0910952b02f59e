#ifndef AMC_MOEBIUS_HPP
#define AMC_MOEBIUS_HPP

#include <cstdint>
#include <vector>

#include "amc/diagonal.hpp"
#include "amc/rational.hpp"
#include "amc/semilattice.hpp"

namespace amc {

/// A function S -> Q, indexed by element.
using PointFunction = std::vector<Rational>;

/// Moebius function of (S, <=). mu(t, s) is defined for t <= s; the extended
/// view returns 0 elsewhere.
class MobiusTable {
 public:
  explicit MobiusTable(const Semilattice& s);

  std::size_t size() const { return n_; }
  /// Throws std::domain_error unless t <= s.
  std::int64_t mu(Element t, Element s) const;
  std::int64_t extended(Element t, Element s) const { return values_[t * n_ + s]; }
  bool defined(Element t, Element s) const { return defined_[t * n_ + s] != 0; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> values_;
  std::vector<unsigned char> defined_;
};

MobiusTable mobius_table(const Semilattice& s);

/// Sigma(x)(t) = sum_{s >= t} x(s): delta_s goes to the indicator of the
/// down-set of s. The base of `x` must be the table of `s`.
PointFunction schutzenberger(const Semilattice& s, const L1Vector& x);

/// Inverse of schutzenberger: f -> sum_s f(s) sum_{t <= s} mu(t, s) delta_t.
L1Vector schutzenberger_inverse(const Semilattice& s, const PointFunction& f);

/// The unit as the preimage of the constant function 1.
L1Vector unit_via_schutzenberger(const Semilattice& s);

/// d(s, t) = sum_r mu~(s, r) mu~(t, r), the pullback of sum_r chi_r (x) chi_r.
/// Stored in canonical_perm() order, like diagonal_recursive.
DiagonalTensor diagonal_via_mobius(const Semilattice& s);

}  // namespace amc

#endif  // AMC_MOEBIUS_HPP
