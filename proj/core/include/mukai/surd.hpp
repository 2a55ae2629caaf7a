#pragma once

#include <compare>
#include <string>

#include "mukai/matrix.hpp"

namespace mukai {

/// Exact real number a + b*sqrt(n) with a, b rational and n a squarefree
/// integer > 1 (or b = 0, n = 1 for rationals). The canonical form makes
/// equality structural.
class QuadraticSurd {
 public:
  QuadraticSurd() : QuadraticSurd(Rational(0)) {}
  QuadraticSurd(Rational a);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(Rational a, Rational b, Integer radicand);

  [[nodiscard]] const Rational& rational_part() const { return a_; }
  [[nodiscard]] const Rational& surd_coefficient() const { return b_; }
  [[nodiscard]] const Integer& radicand() const { return n_; }
  [[nodiscard]] bool is_rational() const { return b_ == 0; }

  [[nodiscard]] int sign() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  friend QuadraticSurd operator-(const QuadraticSurd& x, const Rational& q) {
    return {x.a_ - q, x.b_, x.n_};
  }
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const Rational& q);
  friend bool operator==(const QuadraticSurd& x, const Rational& q) {
    return x.is_rational() && x.a_ == q;
  }

 private:
  Rational a_;
  Rational b_;
  Integer n_;
};

}  // namespace mukai
