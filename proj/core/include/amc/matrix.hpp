#ifndef AMC_MATRIX_HPP
#define AMC_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <variant>
#include <vector>

#include "amc/rational.hpp"

namespace amc {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-list construction; all rows must have equal length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Bounds-checked access; throws std::out_of_range.
  const Rational& at(std::size_t i, std::size_t j) const;

  Matrix transpose() const;

  /// Sum of the absolute values of all entries.
  Rational abs_sum() const;

  bool is_symmetric() const;
  bool is_integral() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

namespace solve {

struct Unique {
  std::vector<Rational> x;
};

/// The system has no solution; `row` is the index of an equation that reduced
/// to 0 = nonzero.
struct Inconsistent {
  std::size_t row;
};

/// Consistent but rank deficient; `free_column` is an unknown with no pivot.
struct Underdetermined {
  std::size_t free_column;
};

}  // namespace solve

using SolveResult = std::variant<solve::Unique, solve::Inconsistent, solve::Underdetermined>;

/// Incremental exact Gaussian elimination over sparse equations.
///
/// Each equation is reduced against the pivot rows collected so far, in
/// increasing column order, as soon as it is added. A row that survives
/// reduction becomes a new pivot row keyed by its first nonzero column.
/// Redundant equations cost one reduction and are then dropped.
class LinearSystem {
 public:
  using Term = std::pair<std::size_t, Rational>;

  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns), pivot_of_(unknowns, kNone) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return equations_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Adds sum(coef * x[col]) = rhs. Repeated columns are summed.
  /// Throws std::out_of_range for a column >= unknowns().
  void add_equation(std::vector<Term> terms, Rational rhs);

  SolveResult solve() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Row {
    std::vector<Term> terms;  // sorted by column, no zeros
    Rational rhs;
  };

  std::size_t unknowns_;
  std::size_t equations_ = 0;
  std::vector<Row> pivots_;
  std::vector<std::size_t> pivot_of_;
  std::size_t first_inconsistent_ = kNone;
};

/// Solves a x = b exactly. Throws std::invalid_argument on dimension mismatch.
SolveResult solve_linear(const Matrix& a, const std::vector<Rational>& b);

}  // namespace amc

#endif  // AMC_MATRIX_HPP
