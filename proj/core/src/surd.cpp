#include "mukai/surd.hpp"

#include <cmath>
#include <sstream>

#include "mukai/errors.hpp"

namespace mukai {

QuadraticSurd::QuadraticSurd(Rational a) : a_(std::move(a)), b_(0), n_(1) {}

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), n_(std::move(radicand)) {
  if (n_ < 0) throw InputError("negative radicand");
  if (b_ == 0 || n_ == 0) {
    b_ = 0;
    n_ = 1;
    return;
  }
  // pull square factors out of the radicand
  Integer rest = n_;
  Integer outside = 1;
  if (rest.fits_ulong_p()) {
    unsigned long r = rest.get_ui();
    unsigned long o = 1;
    for (unsigned long p = 2; p * p <= r; ++p) {
      while (r % (p * p) == 0) {
        r /= p * p;
        o *= p;
      }
    }
    rest = r;
    outside = o;
  } else {
    for (Integer p = 2; p * p <= rest; ++p) {
      while (rest % (p * p) == 0) {
        rest /= p * p;
        outside *= p;
      }
    }
  }
  b_ *= Rational(outside);
  n_ = rest;
  if (n_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

int QuadraticSurd::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare a^2 with b^2 n
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(n_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double QuadraticSurd::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(n_.get_d());
}

std::string QuadraticSurd::to_string() const {
  std::ostringstream os;
  if (b_ == 0) return mukai::to_string(a_);
  if (a_ != 0) os << mukai::to_string(a_) << (b_ > 0 ? "+" : "");
  if (b_ == -1)
    os << '-';
  else if (b_ != 1)
    os << mukai::to_string(b_) << '*';
  os << "sqrt(" << n_.get_str() << ')';
  return os.str();
}

std::strong_ordering operator<=>(const QuadraticSurd& x, const Rational& q) {
  const int s = (x - q).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace mukai
