#include "amc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace amc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const Rational& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return (*this)(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational Matrix::abs_sum() const {
  Rational total;
  for (const auto& x : data_) total += abs(x);
  return total;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_integer(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

void LinearSystem::add_equation(std::vector<Term> terms, Rational rhs) {
  const std::size_t index = equations_++;
  for (const auto& [col, coef] : terms) {
    if (col >= unknowns_) {
      throw std::out_of_range("unknown " + std::to_string(col) + " >= " + std::to_string(unknowns_));
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });

  // Combine duplicates and drop zeros.
  std::vector<Term> row;
  row.reserve(terms.size());
  for (auto& t : terms) {
    if (!row.empty() && row.back().first == t.first) {
      row.back().second += t.second;
    } else {
      if (!row.empty() && row.back().second.is_zero()) row.pop_back();
      row.push_back(std::move(t));
    }
  }
  if (!row.empty() && row.back().second.is_zero()) row.pop_back();

  std::size_t pos = 0;
  while (pos < row.size()) {
    const std::size_t col = row[pos].first;
    const std::size_t p = pivot_of_[col];
    if (p == kNone) {
      ++pos;
      continue;
    }
    // row -= factor * pivot, where pivot has a leading 1 at `col`.
    const Rational factor = row[pos].second;
    const Row& pivot = pivots_[p];
    std::vector<Term> merged;
    merged.reserve(row.size() + pivot.terms.size());
    merged.insert(merged.end(), std::make_move_iterator(row.begin()),
                  std::make_move_iterator(row.begin() + static_cast<std::ptrdiff_t>(pos)));
    std::size_t i = pos + 1;
    std::size_t j = 1;
    while (i < row.size() || j < pivot.terms.size()) {
      if (j >= pivot.terms.size() || (i < row.size() && row[i].first < pivot.terms[j].first)) {
        merged.push_back(std::move(row[i++]));
      } else if (i >= row.size() || pivot.terms[j].first < row[i].first) {
        merged.emplace_back(pivot.terms[j].first, -(factor * pivot.terms[j].second));
        ++j;
      } else {
        Term t = std::move(row[i++]);
        t.second.submul(factor, pivot.terms[j++].second);
        if (!t.second.is_zero()) merged.push_back(std::move(t));
      }
    }
    rhs.submul(factor, pivot.rhs);
    row = std::move(merged);
  }

  if (row.empty()) {
    if (!rhs.is_zero() && first_inconsistent_ == kNone) first_inconsistent_ = index;
    return;
  }
  const Rational lead = row.front().second;
  if (lead != Rational(1)) {
    for (auto& t : row) t.second /= lead;
    rhs /= lead;
  }
  pivot_of_[row.front().first] = pivots_.size();
  pivots_.push_back(Row{std::move(row), std::move(rhs)});
}

SolveResult LinearSystem::solve() const {
  if (first_inconsistent_ != kNone) return solve::Inconsistent{first_inconsistent_};
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (pivot_of_[c] == kNone) return solve::Underdetermined{c};
  }
  std::vector<Rational> x(unknowns_);
  for (std::size_t c = unknowns_; c-- > 0;) {
    const Row& r = pivots_[pivot_of_[c]];
    Rational v = r.rhs;
    for (std::size_t k = 1; k < r.terms.size(); ++k) v.submul(r.terms[k].second, x[r.terms[k].first]);
    x[c] = std::move(v);
  }
  return solve::Unique{std::move(x)};
}

SolveResult solve_linear(const Matrix& a, const std::vector<Rational>& b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve_linear: " + std::to_string(a.rows()) + " equations but " +
                                std::to_string(b.size()) + " right-hand sides");
  }
  LinearSystem system(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<LinearSystem::Term> terms;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) terms.emplace_back(j, a(i, j));
    system.add_equation(std::move(terms), b[i]);
  }
  return system.solve();
}

}  // namespace amc
