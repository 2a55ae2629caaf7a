#pragma once

#include <span>
#include <vector>

#include "mukai/matrix.hpp"
#include "mukai/surd.hpp"

namespace mukai {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr long kRefinementBudget = 1'000'000;

/// det(x I - M), coefficients in ascending order (c_0, ..., c_n), c_n = 1.
class CharPoly {
 public:
  CharPoly() = default;
  explicit CharPoly(IntVector coeffs);

  [[nodiscard]] std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  [[nodiscard]] const IntVector& coeffs() const { return coeffs_; }

  /// p(M) by Horner's rule; the zero matrix when M is the source matrix.
  [[nodiscard]] IntMatrix evaluate(const IntMatrix& m) const;
  [[nodiscard]] Rational evaluate(const Rational& x) const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  IntVector coeffs_;
};

/// Exact characteristic polynomial by Faddeev-LeVerrier over Z (every
/// division in the recurrence is exact).
CharPoly char_poly(const IntMatrix& m);

IntVector poly_multiply(std::span<const Integer> a, std::span<const Integer> b);

struct PolyDivision {
  std::vector<Rational> quotient;
  std::vector<Rational> remainder;  // empty when the division is exact
};
PolyDivision poly_divide(std::span<const Integer> dividend, std::span<const Integer> divisor);

/// True iff every complex root of the polynomial has modulus strictly less
/// than `radius` (> 0). Exact Schur-Cohn recursion on integer coefficients.
bool roots_strictly_inside(std::span<const Integer> coeffs, const Rational& radius);

/// Spectral radius with a certificate:
///   every root satisfies |z| < hi, and some root satisfies |z| >= lo,
/// with hi - lo <= tolerance. `value` is a double inside [lo, hi].
struct CertifiedRadius {
  double value = 0.0;
  Rational lo;
  Rational hi;
  double tolerance = kDefaultTolerance;
};

CertifiedRadius certified_root_radius(std::span<const Integer> coeffs,
                                      double tolerance = kDefaultTolerance);
CertifiedRadius spectral_radius(const IntMatrix& m, double tolerance = kDefaultTolerance);

/// Closed form of the spectral radius of T_O o (- (x) O(-H)) on a K3 with
/// H^2 = 2d: 1 for d <= 4, (d - 2 + sqrt(d^2 - 4d)) / 2 for d >= 5.
QuadraticSurd rho_closed_form(long d);

}  // namespace mukai
