#include "amc/diagonal.hpp"

#include <stdexcept>

namespace amc {

L1Vector::L1Vector(TablePtr base) : base_(std::move(base)) {
  if (!base_) throw std::invalid_argument("L1Vector: null base");
  coeffs_.resize(base_->size());
}

L1Vector::L1Vector(TablePtr base, std::vector<Rational> coeffs) : base_(std::move(base)), coeffs_(std::move(coeffs)) {
  if (!base_) throw std::invalid_argument("L1Vector: null base");
  if (coeffs_.size() != base_->size()) throw std::invalid_argument("L1Vector: coefficient count differs from base size");
}

L1Vector L1Vector::point_mass(TablePtr base, Element s) {
  L1Vector v(std::move(base));
  if (s >= v.size()) throw std::out_of_range("point_mass: element out of range");
  v[s] = 1;
  return v;
}

Rational L1Vector::norm() const {
  Rational total;
  for (const auto& c : coeffs_) total += abs(c);
  return total;
}

L1Vector& L1Vector::operator+=(const L1Vector& o) {
  if (!same_base(base_, o.base_)) throw std::invalid_argument("L1Vector: mismatched bases");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

L1Vector& L1Vector::operator-=(const L1Vector& o) {
  if (!same_base(base_, o.base_)) throw std::invalid_argument("L1Vector: mismatched bases");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

L1Vector operator*(const Rational& c, L1Vector x) {
  for (auto& v : x.coeffs_) v *= c;
  return x;
}

L1Vector convolve(const L1Vector& x, const L1Vector& y) {
  if (!same_base(x.base(), y.base())) throw std::invalid_argument("convolve: mismatched bases");
  const SemigroupTable& t = *x.base();
  L1Vector out(x.base());
  for (Element s = 0; s < t.size(); ++s) {
    if (x[s].is_zero()) continue;
    for (Element u = 0; u < t.size(); ++u) {
      if (y[u].is_zero()) continue;
      out[t(s, u)] += x[s] * y[u];
    }
  }
  return out;
}

DiagonalTensor::DiagonalTensor(TablePtr base, std::vector<Element> order, Matrix d)
    : base_(std::move(base)), order_(std::move(order)), d_(std::move(d)) {
  if (!base_) throw std::invalid_argument("DiagonalTensor: null base");
  const std::size_t n = base_->size();
  if (order_.size() != n || d_.rows() != n || d_.cols() != n) {
    throw std::invalid_argument("DiagonalTensor: dimensions differ from base size");
  }
  position_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order_[i] >= n || position_[order_[i]] != n) throw std::invalid_argument("DiagonalTensor: order is not a permutation");
    position_[order_[i]] = i;
  }
}

Matrix DiagonalTensor::by_element() const {
  const std::size_t n = size();
  Matrix m(n, n);
  for (Element s = 0; s < n; ++s)
    for (Element t = 0; t < n; ++t) m(s, t) = at(s, t);
  return m;
}

L1Vector DiagonalTensor::multiply_out() const {
  const SemigroupTable& t = *base_;
  L1Vector out(base_);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      const Rational& c = d_(i, j);
      if (!c.is_zero()) out[t(order_[i], order_[j])] += c;
    }
  return out;
}

bool same_coefficients(const DiagonalTensor& a, const DiagonalTensor& b) {
  if (a.size() != b.size()) return false;
  for (Element s = 0; s < a.size(); ++s)
    for (Element t = 0; t < a.size(); ++t)
      if (a.at(s, t) != b.at(s, t)) return false;
  return true;
}

L1Vector unit(const Semilattice& s) {
  const auto& perm = s.canonical_perm();
  L1Vector u(s.table_ptr());
  for (std::size_t i = perm.size(); i-- > 0;) {
    const Element p = perm[i];
    Rational v = 1;
    for (Element t = 0; t < s.size(); ++t)
      if (s.less(p, t)) v -= u[t];
    u[p] = std::move(v);
  }
  return u;
}

DiagonalTensor diagonal_recursive(const Semilattice& s) {
  const std::size_t n = s.size();
  const auto& perm = s.canonical_perm();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
  const L1Vector u = unit(s);
  Matrix d(n, n);

  for (std::size_t m = n; m-- > 0;) {
    const Element p = perm[m];
    for (std::size_t j = n; j-- > m + 1;) {
      const Element q = perm[j];
      Rational pq, qp;
      if (!s.leq(p, q)) {
        // q is not >= p: sums over t > q, all at positions beyond j.
        for (Element t = 0; t < n; ++t) {
          if (!s.less(q, t)) continue;
          pq -= d(m, pos[t]);
          qp -= d(pos[t], m);
        }
      } else {
        // q > p, so p is not >= q: sums over t > p, all inside the corner.
        for (Element t = 0; t < n; ++t) {
          if (!s.less(p, t)) continue;
          qp -= d(j, pos[t]);
          pq -= d(pos[t], j);
        }
      }
      d(m, j) = std::move(pq);
      d(j, m) = std::move(qp);
    }
    Rational pp = u[p];
    for (Element a = 0; a < n; ++a) {
      if (!s.leq(p, a)) continue;
      for (Element b = 0; b < n; ++b) {
        if (!s.leq(p, b) || (a == p && b == p) || s.meet(a, b) != p) continue;
        pp -= d(pos[a], pos[b]);
      }
    }
    d(m, m) = std::move(pp);
  }
  return DiagonalTensor(s.table_ptr(), perm, std::move(d));
}

Rational amenability_constant(const DiagonalTensor& d) { return d.matrix().abs_sum(); }

DiagonalCheck verify_diagonal(const DiagonalTensor& d, const L1Vector& u) {
  if (!same_base(d.base(), u.base())) throw std::invalid_argument("verify_diagonal: mismatched bases");
  const SemigroupTable& t = *d.base();
  const std::size_t n = t.size();
  DiagonalCheck check;

  const L1Vector m = d.multiply_out();
  for (Element r = 0; r < n; ++r) {
    if (m[r] != u[r]) {
      check.ok = false;
      check.equation = "unit";
      check.witness = {r};
      check.expected = u[r];
      check.actual = m[r];
      return check;
    }
  }

  const Matrix coeffs = d.by_element();
  for (Element g = 0; g < n; ++g) {
    Matrix left(n, n), right(n, n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Rational& c = coeffs(a, b);
        if (c.is_zero()) continue;
        left(t(g, a), b) += c;
        right(a, t(b, g)) += c;
      }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (left(a, b) != right(a, b)) {
          check.ok = false;
          check.equation = "central";
          check.witness = {g, a, b};
          check.expected = left(a, b);
          check.actual = right(a, b);
          return check;
        }
  }
  return check;
}

DiagonalTensor tensor_diagonal(const DiagonalTensor& a, const DiagonalTensor& b) {
  auto base = std::make_shared<const SemigroupTable>(product_table(*a.base(), *b.base()));
  const std::size_t m = b.size();
  std::vector<Element> order;
  order.reserve(a.size() * m);
  for (Element s : a.order())
    for (Element t : b.order()) order.push_back(s * m + t);
  return DiagonalTensor(std::move(base), std::move(order), kron(a.matrix(), b.matrix()));
}

}  // namespace amc
