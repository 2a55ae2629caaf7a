#include "mukai/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <utility>

#include "mukai/errors.hpp"

namespace mukai {

CharPoly::CharPoly(IntVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InputError("characteristic polynomial needs a coefficient");
}

IntMatrix CharPoly::evaluate(const IntMatrix& m) const {
  if (!m.is_square()) throw InputError("evaluating a polynomial at a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * m + *it * IntMatrix::identity(n);
  return acc;
}

Rational CharPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

CharPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  IntVector c(n + 1);
  c[n] = 1;
  IntMatrix mk(n, n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    const Integer tr = (m * mk).trace();
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return CharPoly(std::move(c));
}

IntVector poly_multiply(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  IntVector out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

PolyDivision poly_divide(std::span<const Integer> dividend, std::span<const Integer> divisor) {
  std::size_t dd = divisor.size();
  while (dd > 0 && divisor[dd - 1] == 0) --dd;
  if (dd == 0) throw InputError("polynomial division by zero");
  std::vector<Rational> rem(dividend.begin(), dividend.end());
  PolyDivision out;
  if (rem.size() < dd) {
    out.quotient = {Rational(0)};
  } else {
    out.quotient.assign(rem.size() - dd + 1, Rational(0));
    const Rational lead = divisor[dd - 1];
    for (std::size_t k = rem.size() - 1;; --k) {
      const Rational q = rem[k] / lead;
      out.quotient[k - dd + 1] = q;
      if (q != 0)
        for (std::size_t j = 0; j < dd; ++j) rem[k - dd + 1 + j] -= q * Rational(divisor[j]);
      if (k == dd - 1) break;
    }
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  out.remainder = std::move(rem);
  return out;
}

bool roots_strictly_inside(std::span<const Integer> coeffs, const Rational& radius) {
  if (radius <= 0) throw InputError("Schur-Cohn test needs a positive radius");
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0) --n;
  if (n == 0) throw InputError("zero polynomial has no roots to bound");

  // f(z) = v^deg p(u z / v) has integer coefficients a_k u^k v^(deg-k)
  const Integer& u = radius.get_num();
  const Integer& v = radius.get_den();
  const std::size_t deg = n - 1;
  IntVector a(n);
  for (std::size_t k = 0; k < n; ++k) {
    Integer uk, vk;
    mpz_pow_ui(uk.get_mpz_t(), u.get_mpz_t(), k);
    mpz_pow_ui(vk.get_mpz_t(), v.get_mpz_t(), deg - k);
    a[k] = coeffs[k] * uk * vk;
  }

  // all zeros in |z|<1  <=>  |a_n| > |a_0|  and  (a_n f - a_0 f_rev)/z has all zeros in |z|<1
  while (a.size() > 1) {
    const std::size_t m = a.size() - 1;
    const Integer lead = a[m];
    const Integer tail = a[0];
    if (abs(lead) <= abs(tail)) return false;
    IntVector next(m);
    for (std::size_t j = 1; j <= m; ++j) next[j - 1] = lead * a[j] - tail * a[m - j];
    const Integer g = content(next);
    if (g > 1)
      for (auto& x : next) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    a = std::move(next);
  }
  return true;
}

namespace {

double numeric_root_radius(std::span<const Integer> coeffs) {
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return 0.0;
  const double lead = coeffs[n].get_d();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                    static_cast<Eigen::Index>(n));
  for (std::size_t i = 1; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) =
        -coeffs[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) return -1.0;
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

CertifiedRadius certified_root_radius(std::span<const Integer> coeffs, double tolerance) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance))
    throw InputError("tolerance must be a positive finite number");
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0) --n;
  if (n < 2) throw InputError("polynomial of degree < 1 has no roots");
  const std::span<const Integer> p = coeffs.first(n);

  // Cauchy: every root satisfies |z| < 1 + max |a_i / a_n|
  Rational hi = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) hi = std::max(hi, make_rational(abs(p[i]), abs(p[n - 1])));
  hi += 1;
  Rational lo = 0;
  const Rational tol(tolerance);

  const double seed = numeric_root_radius(p);
  if (std::isfinite(seed) && seed >= 0.0) {
    const Rational up = Rational(seed) + tol / 4;
    if (up < hi && roots_strictly_inside(p, up)) hi = up;
    const Rational down = Rational(seed) - tol / 4;
    if (down > lo && down < hi && !roots_strictly_inside(p, down)) lo = down;
  }

  long steps = 0;
  while (hi - lo > tol) {
    if (++steps > kRefinementBudget)
      throw CertificationError("spectral radius not certified within the refinement budget");
    Rational mid = (lo + hi) / 2;
    if (roots_strictly_inside(p, mid))
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }

  CertifiedRadius out;
  out.lo = lo;
  out.hi = hi;
  out.tolerance = tolerance;
  const Rational mid = (lo + hi) / 2;
  out.value = mid.get_d();
  if (Rational(out.value) < lo || Rational(out.value) > hi) out.value = lo.get_d();
  return out;
}

CertifiedRadius spectral_radius(const IntMatrix& m, double tolerance) {
  const CharPoly p = char_poly(m);
  return certified_root_radius(p.coeffs(), tolerance);
}

QuadraticSurd rho_closed_form(long d) {
  if (d < 1) throw InputError("d must be positive");
  if (d <= 4) return QuadraticSurd(Rational(1));
  const Integer dd = d;
  return QuadraticSurd(make_rational(dd - 2, Integer(2)), Rational(1, 2), dd * dd - 4 * dd);
}

}  // namespace mukai
