#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mukai {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j]; all columns share a length.
  static IntMatrix from_columns(std::span<const IntVector> columns);
  static IntMatrix from_rows(std::span<const IntVector> rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_symmetric() const;

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] IntVector row(std::size_t i) const;
  [[nodiscard]] IntVector column(std::size_t j) const;
  [[nodiscard]] IntMatrix transpose() const;
  [[nodiscard]] IntVector apply(std::span<const Integer> x) const;
  [[nodiscard]] Integer trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  [[nodiscard]] std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& a);

/// Inverse of a unimodular matrix; nullopt when det != +-1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a);

/// Unique rational solution of A x = b for A of full column rank.
/// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a,
                                                            std::span<const Integer> b);

std::size_t rank(const IntMatrix& a);

/// Column Hermite-style echelon form: A * U = H with U unimodular, the first
/// `rank` columns of H in lower echelon form with positive pivots and the
/// remaining columns zero.
struct ColumnEchelon {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(const IntMatrix& a);

/// Basis of the integer kernel {x in Z^n : A x = 0}. The kernel of an integer
/// matrix is always saturated, and so is the returned basis.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// True iff the vectors are independent and span a primitive (saturated)
/// sublattice of Z^n.
bool spans_saturated_sublattice(std::span<const IntVector> vectors);

/// Pairwise size reduction of a lattice basis in the Euclidean norm; the
/// spanned lattice is unchanged.
void size_reduce(std::vector<IntVector>& basis);

Integer content(std::span<const Integer> v);
std::optional<Integer> exact_sqrt(const Integer& n);
inline bool is_perfect_square(const Integer& n) { return exact_sqrt(n).has_value(); }

/// num/den in lowest terms.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Rational -> "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace mukai
