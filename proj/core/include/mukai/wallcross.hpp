#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mukai/lattice.hpp"

namespace mukai {

inline constexpr long kPerturbationBudget = 1'000'000;

/// Gram matrix of the rank-two lattice <s, v>.
struct Rank2Form {
  IntMatrix gram;

  static Rank2Form of(const K3LatticeModel& model, const MukaiVector& s, const MukaiVector& v);
};

/// Integral primitive v with <v, s> = 0, v^2 > 0 and 2 v^2 not a square.
///
/// Enumerates coefficient vectors in [-bound, bound]^k over a basis of s^perp
/// and returns the smallest admissible hit, ordered by (v^2, l1 norm, number of
/// negative coordinates, lexicographic) with the sign fixed so the first
/// nonzero coordinate is positive. When the box holds positive classes but
/// none with 2 v^2 non-square, the shortest positive class is perturbed (see
/// perturb_to_nonsquare). Throws PreconditionError when s^2 != -2 and
/// SearchExhaustedError when the box holds no class with v^2 > 0.
MukaiVector find_positive_orthogonal(const K3LatticeModel& model, const MukaiVector& s,
                                     long search_bound);

/// Given v in s^perp with v^2 > 0, returns the primitive part of N v + u for
/// the smallest N >= 1 making 2 (N v + u)^2 a non-square, where u is a short
/// class in s^perp and v^perp with u^2 != 0. Returns primitive_part(v) when
/// 2 v^2 is already a non-square.
MukaiVector perturb_to_nonsquare(const K3LatticeModel& model, const MukaiVector& s,
                                 const MukaiVector& v);

/// True iff <s, v> contains no nonzero class of square zero, i.e. 2 v^2 is not
/// a square. Requires <v, s> = 0 and s^2 = -2.
bool rank2_isotropy_free(const K3LatticeModel& model, const MukaiVector& s, const MukaiVector& v);

struct AppendixSignatureReport {
  Signature full;
  Signature s_perp;
  Signature s_alone;
  /// span of a supplied negative-definite subspace together with s, and the
  /// part of that span orthogonal to s
  std::optional<Signature> span_with_s;
  std::optional<Signature> s_perp_in_span;
  bool degenerate = false;
};

AppendixSignatureReport appendix_signatures(const K3LatticeModel& model, const MukaiVector& s,
                                            std::span<const MukaiVector> negative_subspace = {});

}  // namespace mukai
