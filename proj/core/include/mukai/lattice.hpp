#pragma once

#include <span>
#include <string>
#include <vector>

#include "mukai/matrix.hpp"

namespace mukai {

/// Inertia of a real symmetric form.
struct Signature {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;

  [[nodiscard]] int rank() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Picard lattice of a projective K3 surface in a fixed basis. The Gram matrix
/// must be symmetric, even and of signature (1, rho - 1); construction throws
/// InputError otherwise.
///
/// Mukai vectors are coordinatised as columns (r, c_1, ..., c_rho, m).
class K3LatticeModel {
 public:
  explicit K3LatticeModel(IntMatrix ns_gram);

  /// Picard rank one with H^2 = 2d.
  static K3LatticeModel of_degree(long d);

  [[nodiscard]] std::size_t picard_rank() const { return ns_gram_.rows(); }
  [[nodiscard]] std::size_t dimension() const { return ns_gram_.rows() + 2; }
  [[nodiscard]] const IntMatrix& ns_gram() const { return ns_gram_; }
  /// Full (rho+2)x(rho+2) Gram of the Mukai pairing.
  [[nodiscard]] const IntMatrix& mukai_gram() const { return mukai_gram_; }

  [[nodiscard]] Integer ns_product(std::span<const Integer> c1,
                                   std::span<const Integer> c2) const;

  friend bool operator==(const K3LatticeModel& a, const K3LatticeModel& b) {
    return a.ns_gram_ == b.ns_gram_;
  }

 private:
  IntMatrix ns_gram_;
  IntMatrix mukai_gram_;
};

struct MukaiVector {
  Integer r;
  IntVector c;
  Integer m;

  static MukaiVector from_coordinates(std::span<const Integer> x);
  [[nodiscard]] IntVector coordinates() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

/// (1, 0, 1): the class of O_X.
MukaiVector structure_sheaf_class(const K3LatticeModel& model);

/// <v,w> = c_v . c_w - r_v m_w - r_w m_v.
Integer mukai_pairing(const K3LatticeModel& model, const MukaiVector& v, const MukaiVector& w);
/// chi(v, w) = -<v, w>.
Integer euler_pairing(const K3LatticeModel& model, const MukaiVector& v, const MukaiVector& w);
Integer square(const K3LatticeModel& model, const MukaiVector& v);
bool is_spherical_class(const K3LatticeModel& model, const MukaiVector& v);
/// True iff 2 v^2 is not a perfect square.
bool is_twice_square_free(const K3LatticeModel& model, const MukaiVector& v);

/// Gram matrix of the Mukai pairing on a list of vectors.
IntMatrix gram_matrix(const K3LatticeModel& model, std::span<const MukaiVector> vs);

/// Inertia by exact congruence diagonalisation over Q. Accepts degenerate
/// forms; throws InputError on non-symmetric input.
Signature signature_of(const IntMatrix& gram);

/// Integral basis of the saturated sublattice {w : <w, v_i> = 0 for all i}.
/// Bases are only defined up to GL(Z); the returned one is size-reduced.
std::vector<MukaiVector> orthogonal_complement_basis(const K3LatticeModel& model,
                                                     std::span<const MukaiVector> vs);

/// v divided by the gcd of its coordinates.
MukaiVector primitive_part(const MukaiVector& v);

}  // namespace mukai
