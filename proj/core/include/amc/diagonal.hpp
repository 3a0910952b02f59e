#ifndef AMC_DIAGONAL_HPP
#define AMC_DIAGONAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "amc/matrix.hpp"
#include "amc/rational.hpp"
#include "amc/semigroup_table.hpp"
#include "amc/semilattice.hpp"

namespace amc {

/// An element sum x(s) delta_s of the semigroup algebra over a finite
/// commutative semigroup, indexed by the base table's element indices.
class L1Vector {
 public:
  explicit L1Vector(TablePtr base);
  L1Vector(TablePtr base, std::vector<Rational> coeffs);

  static L1Vector point_mass(TablePtr base, Element s);

  const TablePtr& base() const { return base_; }
  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](Element s) const { return coeffs_[s]; }
  Rational& operator[](Element s) { return coeffs_[s]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Sum of absolute values of the coefficients.
  Rational norm() const;

  L1Vector& operator+=(const L1Vector& o);
  L1Vector& operator-=(const L1Vector& o);
  friend L1Vector operator+(L1Vector a, const L1Vector& b) { return a += b; }
  friend L1Vector operator-(L1Vector a, const L1Vector& b) { return a -= b; }
  friend L1Vector operator*(const Rational& c, L1Vector x);

  friend bool operator==(const L1Vector& a, const L1Vector& b) {
    return same_base(a.base_, b.base_) && a.coeffs_ == b.coeffs_;
  }

 private:
  TablePtr base_;
  std::vector<Rational> coeffs_;
};

/// (x * y)(r) = sum over st = r of x(s) y(t). Throws std::invalid_argument
/// when the bases differ.
L1Vector convolve(const L1Vector& x, const L1Vector& y);

/// Coefficients d(s, t) of sum d(s, t) delta_s (x) delta_t, stored as a dense
/// matrix whose row/column i refers to base element order()[i].
class DiagonalTensor {
 public:
  DiagonalTensor(TablePtr base, std::vector<Element> order, Matrix d);

  const TablePtr& base() const { return base_; }
  std::size_t size() const { return order_.size(); }
  const std::vector<Element>& order() const { return order_; }
  const Matrix& matrix() const { return d_; }
  std::size_t position(Element s) const { return position_[s]; }

  /// d(s, t) addressed by base element indices.
  const Rational& at(Element s, Element t) const { return d_(position_[s], position_[t]); }

  /// The same coefficients with rows and columns in base index order.
  Matrix by_element() const;

  /// m(D)(r) = sum over st = r of d(s, t).
  L1Vector multiply_out() const;

 private:
  TablePtr base_;
  std::vector<Element> order_;
  std::vector<std::size_t> position_;
  Matrix d_;
};

/// Entrywise equality by element, independent of the storage order.
bool same_coefficients(const DiagonalTensor& a, const DiagonalTensor& b);

/// The unit of l1(S): u(p) = 1 - sum_{t > p} u(t), evaluated from the maximal
/// elements downward.
L1Vector unit(const Semilattice& s);

/// The diagonal of l1(S), built in canonical_perm() order by growing the
/// lower-right corner: for each new index m (from the last down to 0) the
/// off-diagonal entries of row and column m come from the vanishing sums
///   d(p, q) = -sum_{t > q} d(p, t)        when q is not >= p,
///   d(q, p) = -sum_{s > q} d(s, p)        likewise,
/// and then the diagonal entry from the unit,
///   d(p, p) = u(p) - sum_{(s,t) > (p,p), st = p} d(s, t).
/// Symmetry is not imposed; both triangles are computed.
DiagonalTensor diagonal_recursive(const Semilattice& s);

/// sum |d(s, t)|.
Rational amenability_constant(const DiagonalTensor& d);

struct DiagonalCheck {
  bool ok = true;
  /// "unit" (m(D) differs from u at witness[0]) or "central"
  /// (delta_g . D and D . delta_g differ at coefficient (witness[1], witness[2])
  /// for g = witness[0]).
  std::string equation;
  std::vector<Element> witness;
  Rational expected;
  Rational actual;
};

/// Checks m(D) = u and delta_g . D = D . delta_g for every basis element g.
/// Throws std::invalid_argument when the bases differ.
DiagonalCheck verify_diagonal(const DiagonalTensor& d, const L1Vector& u);

/// D_A (x) D_B over the direct product base; coefficient
/// ((s, t), (s', t')) is d_A(s, s') d_B(t, t').
DiagonalTensor tensor_diagonal(const DiagonalTensor& a, const DiagonalTensor& b);

}  // namespace amc

#endif  // AMC_DIAGONAL_HPP
