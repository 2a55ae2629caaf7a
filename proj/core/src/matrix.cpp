#include "mukai/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "mukai/errors.hpp"

namespace mukai {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  IntMatrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw InputError("columns of unequal length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows) {
  if (rows.empty()) return {};
  const std::size_t n = rows.front().size();
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw InputError("rows of unequal length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntVector IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

Integer IntMatrix::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference dimension mismatch");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMatrix operator*(const Integer& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Gauss-Jordan over Q on an augmented system; returns reduced rows and pivots.
struct Reduced {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> pivots;
};

Reduced reduce(std::vector<std::vector<Rational>> m, std::size_t ncols) {
  Reduced out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

}  // namespace

std::size_t rank(const IntMatrix& a) { return reduce(to_rational(a), a.cols()).pivots.size(); }

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a) {
  if (!a.is_square()) throw InputError("inverse of a non-square matrix");
  const Integer det = determinant(a);
  if (abs(det) != 1) return std::nullopt;
  const std::size_t n = a.rows();
  auto m = to_rational(a);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rational(0));
    m[i][n + i] = 1;
  }
  const Reduced red = reduce(std::move(m), n);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = red.rows[i][n + j];
      if (x.get_den() != 1) throw InvarianceError("unimodular inverse is not integral");
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::optional<std::vector<Rational>> solve_full_column_rank(const IntMatrix& a,
                                                            std::span<const Integer> b) {
  if (b.size() != a.rows()) throw InputError("right-hand side dimension mismatch");
  auto m = to_rational(a);
  for (std::size_t i = 0; i < a.rows(); ++i) m[i].emplace_back(b[i]);
  const Reduced red = reduce(std::move(m), a.cols() + 1);
  if (red.pivots.size() != a.cols() ||
      (!red.pivots.empty() && red.pivots.back() == a.cols()))
    return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) x[i] = red.rows[i][a.cols()];
  return x;
}

ColumnEchelon column_echelon(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ColumnEchelon out{a, IntMatrix::identity(n), 0, {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;

  auto col_combine = [&](std::size_t j, std::size_t k, const Integer& p, const Integer& q,
                         const Integer& r, const Integer& s) {
    // (col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k), ps - qr = 1
    for (IntMatrix* mat : {&h, &u}) {
      for (std::size_t i = 0; i < mat->rows(); ++i) {
        Integer x = (*mat)(i, j);
        Integer y = (*mat)(i, k);
        (*mat)(i, j) = p * x + q * y;
        (*mat)(i, k) = r * x + s * y;
      }
    }
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (IntMatrix* mat : {&h, &u})
      for (std::size_t i = 0; i < mat->rows(); ++i) std::swap((*mat)(i, j), (*mat)(i, k));
  };
  auto col_negate = [&](std::size_t j) {
    for (IntMatrix* mat : {&h, &u})
      for (std::size_t i = 0; i < mat->rows(); ++i) (*mat)(i, j) = -(*mat)(i, j);
  };

  std::size_t piv = 0;
  for (std::size_t i = 0; i < m && piv < n; ++i) {
    std::size_t first = piv;
    while (first < n && h(i, first) == 0) ++first;
    if (first == n) continue;
    if (first != piv) col_swap(piv, first);
    for (std::size_t k = piv + 1; k < n; ++k) {
      if (h(i, k) == 0) continue;
      Integer g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), h(i, piv).get_mpz_t(),
                 h(i, k).get_mpz_t());
      const Integer a_g = h(i, piv) / g;
      const Integer b_g = h(i, k) / g;
      // [p, -b/g; q, a/g] has determinant p a/g + q b/g = 1
      col_combine(piv, k, p, q, -b_g, a_g);
    }
    if (h(i, piv) < 0) col_negate(piv);
    // reduce earlier pivot columns' entries modulo this pivot
    for (std::size_t k = 0; k < piv; ++k) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h(i, k).get_mpz_t(), h(i, piv).get_mpz_t());
      if (f != 0) col_combine(k, piv, Integer(1), Integer(-f), Integer(0), Integer(1));
    }
    out.pivot_rows.push_back(i);
    ++piv;
  }
  out.rank = piv;
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const ColumnEchelon e = column_echelon(a);
  std::vector<IntVector> basis;
  for (std::size_t j = e.rank; j < a.cols(); ++j) basis.push_back(e.u.column(j));
  return basis;
}

bool spans_saturated_sublattice(std::span<const IntVector> vectors) {
  if (vectors.empty()) return true;
  const ColumnEchelon e = column_echelon(IntMatrix::from_rows(vectors));
  if (e.rank != vectors.size()) return false;
  for (std::size_t k = 0; k < e.rank; ++k)
    if (e.h(e.pivot_rows[k], k) != 1) return false;
  return true;
}

void size_reduce(std::vector<IntVector>& basis) {
  auto dot = [](const IntVector& x, const IntVector& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(basis.begin(), basis.end(),
              [&](const IntVector& x, const IntVector& y) { return dot(x, x) < dot(y, y); });
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        const Integer nj = dot(basis[j], basis[j]);
        if (nj == 0) continue;
        // nearest integer to <b_i,b_j>/<b_j,b_j>
        Integer num = 2 * dot(basis[i], basis[j]) + nj;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), Integer(2 * nj).get_mpz_t());
        if (f == 0) continue;
        IntVector cand = basis[i];
        for (std::size_t k = 0; k < cand.size(); ++k) cand[k] -= f * basis[j][k];
        if (dot(cand, cand) < dot(basis[i], basis[i])) {
          basis[i] = std::move(cand);
          changed = true;
        }
      }
  }
  // canonical sign: first nonzero entry positive
  for (auto& b : basis) {
    auto it = std::find_if(b.begin(), b.end(), [](const Integer& x) { return x != 0; });
    if (it != b.end() && *it < 0)
      for (auto& x : b) x = -x;
  }
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace mukai
