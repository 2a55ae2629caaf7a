#pragma once

#include <optional>
#include <vector>

#include "mukai/autoeq.hpp"
#include "mukai/lattice.hpp"
#include "mukai/spectral.hpp"
#include "mukai/surd.hpp"

namespace mukai {

/// Affine piece t -> slope * t + intercept on (lower, upper]; a missing
/// bound stands for -inf / +inf. The first piece is closed on the left.
struct CurvePiece {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  Rational slope;
  Rational intercept;
  /// false when the value is only known to be an upper bound
  bool proven = true;
};

/// Continuous piecewise-linear function of t tiling the real line.
class EntropyCurve {
 public:
  explicit EntropyCurve(std::vector<CurvePiece> pieces);

  [[nodiscard]] const std::vector<CurvePiece>& pieces() const { return pieces_; }
  [[nodiscard]] const CurvePiece& piece_at(const Rational& t) const;
  [[nodiscard]] Rational eval(const Rational& t) const;
  [[nodiscard]] bool proven_at(const Rational& t) const { return piece_at(t).proven; }
  [[nodiscard]] std::vector<Rational> breakpoints() const;

 private:
  std::vector<CurvePiece> pieces_;
};

enum class Complement { kNonempty, kEmpty, kUnknown };

/// h_t of a spherical twist T_E, E d-spherical:
///   (1 - d) t for t <= 0, always;
///   0 for t > 0 when d = 1 or the left orthogonal of E is nonempty;
///   otherwise 0 is only an upper bound and the piece is flagged unproven.
EntropyCurve twist_entropy_curve(long spherical_dim, Complement complement);

/// h^0(O_X(kH)) = k^2 d + 2 for k >= 1 (Riemann-Roch plus Kodaira vanishing).
Integer h0_line_bundle(long k, long d);

/// dim Ext^{n+2}(O_X, Phi^n(O_X(-i)) (x) O_X(-k)), the only nonzero Ext in
/// the top degree, for Phi = T_O o (- (x) O(-1)) and H^2 = 2d.
Integer ext_top_dim(long n, long i, long k, long d);

struct DeltaPrimeBound {
  Integer value;        // ext_top_dim(n, i, 1, d)
  Integer paper_bound;  // (d + 2)^n
};
DeltaPrimeBound delta_prime_lower_bound(long n, long i, long d);

/// chi(O_X, Phi^n(O_X(-i)) (x) O_X(-k)) evaluated purely on the Mukai lattice.
/// The model's first NS basis vector plays H and must satisfy H^2 = 2d.
Integer chi_iterate(long n, long i, long k, long d, const K3LatticeModel& model);
Integer chi_iterate(long n, long i, long k, long d);

struct ExtRecursionRow {
  long n = 0;
  long top_degree = 0;  // n + 2
  long vanishing_lo = 2;
  long vanishing_hi = 0;  // Ext^m = 0 outside [vanishing_lo, vanishing_hi]
  Integer top_dim;
  Integer paper_bound;
  Integer chi;
};
std::vector<ExtRecursionRow> ext_recursion_table(long d, long i, long k, long n_max);

/// Lower bound log(d+2) for h_0(Phi) against log of the spectral radius of
/// the induced isometry. `certified_positive` is decided by exact comparison
/// of d + 2 with the quadratic surd rho.
struct GromovYomdinGap {
  long d = 0;
  double lower_bound = 0.0;
  double log_rho = 0.0;
  double gap = 0.0;
  QuadraticSurd rho;
  bool certified_positive = false;
};
GromovYomdinGap gy_gap(long d);

/// log of the certified spectral radius: a lower bound for h_0 of any
/// categorical lift of the isometry.
double kst_lower_bound(const Isometry& a, double tolerance = kDefaultTolerance);

}  // namespace mukai
