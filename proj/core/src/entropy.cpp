#include "mukai/entropy.hpp"

#include <cmath>
#include <utility>

#include "mukai/errors.hpp"

namespace mukai {

namespace {

void require_positive(long x, const char* name) {
  if (x < 1) throw InputError(std::string(name) + " must be a positive integer");
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

EntropyCurve::EntropyCurve(std::vector<CurvePiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InputError("entropy curve needs at least one piece");
  if (pieces_.front().lower || pieces_.back().upper)
    throw InputError("entropy curve pieces must cover the whole line");
  for (std::size_t k = 0; k + 1 < pieces_.size(); ++k) {
    const auto& a = pieces_[k];
    const auto& b = pieces_[k + 1];
    if (!a.upper || !b.lower || *a.upper != *b.lower)
      throw InputError("entropy curve pieces do not tile the line");
    if (b.upper && *b.upper <= *b.lower) throw InputError("empty entropy curve piece");
    const Rational t = *a.upper;
    if (a.slope * t + a.intercept != b.slope * t + b.intercept)
      throw InvarianceError("entropy curve is discontinuous at t = " + to_string(t));
  }
}

const CurvePiece& EntropyCurve::piece_at(const Rational& t) const {
  for (const auto& p : pieces_)
    if (!p.upper || t <= *p.upper) return p;
  return pieces_.back();
}

Rational EntropyCurve::eval(const Rational& t) const {
  const CurvePiece& p = piece_at(t);
  return p.slope * t + p.intercept;
}

std::vector<Rational> EntropyCurve::breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t k = 0; k + 1 < pieces_.size(); ++k) out.push_back(*pieces_[k].upper);
  return out;
}

EntropyCurve twist_entropy_curve(long spherical_dim, Complement complement) {
  require_positive(spherical_dim, "spherical dimension");
  CurvePiece negative;
  negative.upper = Rational(0);
  negative.slope = Rational(1 - spherical_dim);
  negative.intercept = 0;
  negative.proven = true;

  CurvePiece positive;
  positive.lower = Rational(0);
  positive.slope = 0;
  positive.intercept = 0;
  positive.proven = spherical_dim == 1 || complement == Complement::kNonempty;
  return EntropyCurve({negative, positive});
}

Integer h0_line_bundle(long k, long d) {
  require_positive(k, "k");
  require_positive(d, "d");
  const Integer kk = k;
  return kk * kk * d + 2;
}

Integer ext_top_dim(long n, long i, long k, long d) {
  if (n < 0) throw InputError("n must be non-negative");
  require_positive(i, "i");
  require_positive(k, "k");
  require_positive(d, "d");
  if (n == 0) return h0_line_bundle(i + k, d);
  // the last step twists by O(-k); every earlier step by O(-1)
  return h0_line_bundle(i + 1, d) * ipow(h0_line_bundle(1, d), static_cast<unsigned long>(n - 1)) *
         h0_line_bundle(k, d);
}

DeltaPrimeBound delta_prime_lower_bound(long n, long i, long d) {
  DeltaPrimeBound out;
  out.value = ext_top_dim(n, i, 1, d);
  out.paper_bound = ipow(Integer(d + 2), static_cast<unsigned long>(n));
  return out;
}

Integer chi_iterate(long n, long i, long k, long d, const K3LatticeModel& model) {
  if (n < 0) throw InputError("n must be non-negative");
  require_positive(i, "i");
  require_positive(k, "k");
  require_positive(d, "d");
  if (model.ns_gram()(0, 0) != 2 * d)
    throw InputError("model polarisation has H^2 = " + model.ns_gram()(0, 0).get_str() +
                     ", expected 2d = " + std::to_string(2 * d));
  const std::size_t rho = model.picard_rank();

  IntVector minus_i_h(rho, Integer(0));
  minus_i_h[0] = -i;
  const Isometry to_o_minus_i = tensor_line_bundle_action(model, minus_i_h);
  MukaiVector v = to_o_minus_i.apply(structure_sheaf_class(model));  // v(O(-iH))

  v = power(phi_h_full(model), n).apply(v);
  IntVector minus_k_h(rho, Integer(0));
  minus_k_h[0] = -k;
  v = tensor_line_bundle_action(model, minus_k_h).apply(v);
  return euler_pairing(model, structure_sheaf_class(model), v);
}

Integer chi_iterate(long n, long i, long k, long d) {
  return chi_iterate(n, i, k, d, K3LatticeModel::of_degree(d));
}

std::vector<ExtRecursionRow> ext_recursion_table(long d, long i, long k, long n_max) {
  if (n_max < 0) throw InputError("n_max must be non-negative");
  const K3LatticeModel model = K3LatticeModel::of_degree(d);
  std::vector<ExtRecursionRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    ExtRecursionRow row;
    row.n = n;
    row.top_degree = n + 2;
    row.vanishing_hi = n + 2;
    row.top_dim = ext_top_dim(n, i, k, d);
    row.paper_bound = ipow(Integer(d + 2), static_cast<unsigned long>(n));
    row.chi = chi_iterate(n, i, k, d, model);
    rows.push_back(std::move(row));
  }
  return rows;
}

GromovYomdinGap gy_gap(long d) {
  require_positive(d, "d");
  GromovYomdinGap out;
  out.d = d;
  out.rho = rho_closed_form(d);
  // log is monotone, so gap > 0 iff d + 2 > rho exactly
  out.certified_positive = (out.rho <=> Rational(d + 2)) == std::strong_ordering::less;
  out.lower_bound = std::log(static_cast<double>(d + 2));
  out.log_rho = out.rho.is_rational() && out.rho == Rational(1) ? 0.0 : std::log(out.rho.to_double());
  out.gap = out.lower_bound - out.log_rho;
  return out;
}

double kst_lower_bound(const Isometry& a, double tolerance) {
  return std::log(spectral_radius(a.matrix(), tolerance).value);
}

}  // namespace mukai
