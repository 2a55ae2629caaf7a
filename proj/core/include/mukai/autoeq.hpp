#pragma once

#include <span>
#include <string>
#include <vector>

#include "mukai/lattice.hpp"

namespace mukai {

/// Integer matrix acting on Mukai coordinates (r, c, m) as columns and
/// preserving the Mukai pairing: M^T G M = G. Construction verifies this
/// exactly and throws InvarianceError on failure.
class Isometry {
 public:
  Isometry(K3LatticeModel model, IntMatrix matrix, std::string label);

  static Isometry identity(const K3LatticeModel& model);

  [[nodiscard]] const K3LatticeModel& model() const { return model_; }
  [[nodiscard]] const IntMatrix& matrix() const { return matrix_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] Integer determinant() const;

  [[nodiscard]] MukaiVector apply(const MukaiVector& v) const;

 private:
  K3LatticeModel model_;
  IntMatrix matrix_;
  std::string label_;
};

/// Lattice shadow of the spherical twist T_E with v(E) = s: the reflection
/// v -> v + <v,s> s. Requires s^2 = -2 (PreconditionError otherwise).
Isometry spherical_twist_action(const K3LatticeModel& model, const MukaiVector& s);

/// Action of - (x) O(D): Mukai product with exp(D) = (1, D, D^2/2).
Isometry tensor_line_bundle_action(const K3LatticeModel& model, std::span<const Integer> divisor);

/// The shift [n] acts by (-1)^n.
Isometry shift_action(const K3LatticeModel& model, long n);

/// compose(a, b) applies b first, then a.
Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);
Isometry power(const Isometry& a, long n);

/// T_{O_X} o (- (x) O(-H)) where H is the first NS basis vector and H^2 = 2d.
Isometry phi_h_full(const K3LatticeModel& model);

/// Basis (1,0,0), (0,H,0), (0,0,1) of H^0 + Z.H + H^4 with H the first NS
/// basis vector.
std::vector<MukaiVector> polarized_sublattice_basis(const K3LatticeModel& model);

/// Matrix of `a` on the span of `basis` (columns = coordinates of images).
/// Throws InputError when the basis is dependent or not saturated and
/// InvarianceError when the span is not mapped into itself.
IntMatrix restrict_to_sublattice(const Isometry& a, std::span<const MukaiVector> basis);

bool fixes_pointwise(const Isometry& a, std::span<const MukaiVector> vs);

}  // namespace mukai
