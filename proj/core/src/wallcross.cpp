#include "mukai/wallcross.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <tuple>
#include <utility>

#include "mukai/errors.hpp"

namespace mukai {

namespace {

void require_spherical(const K3LatticeModel& model, const MukaiVector& s) {
  if (s.c.size() != model.picard_rank()) throw InputError("spherical class has wrong NS length");
  if (!is_spherical_class(model, s))
    throw PreconditionError("class " + s.to_string() + " has square " + square(model, s).get_str() +
                            ", expected -2");
}

MukaiVector canonical_sign(MukaiVector v) {
  IntVector x = v.coordinates();
  auto it = std::find_if(x.begin(), x.end(), [](const Integer& e) { return e != 0; });
  if (it != x.end() && *it < 0)
    for (auto& e : x) e = -e;
  return MukaiVector::from_coordinates(x);
}

// ordering key: (v^2, l1 norm, #negative coordinates, coordinates)
using Key = std::tuple<Integer, Integer, long, IntVector>;

Key key_of(const Integer& v2, const IntVector& x) {
  Integer l1 = 0;
  long neg = 0;
  for (const auto& e : x) {
    l1 += abs(e);
    if (e < 0) ++neg;
  }
  return {v2, l1, neg, x};
}

struct BoxHits {
  std::optional<std::pair<Key, IntVector>> best_nonsquare;
  std::optional<std::pair<Key, IntVector>> best_positive;
};

// Enumerates a in [-bound, bound]^k with scalar type T; `basis` are
// coordinates of a basis of s^perp and `gram` its Gram matrix.
template <typename T, typename ToT>
BoxHits scan_box(const std::vector<IntVector>& basis, const IntMatrix& gram, long bound, ToT to_t) {
  const std::size_t k = basis.size();
  const std::size_t n = basis.front().size();
  std::vector<std::vector<T>> b(k, std::vector<T>(n));
  std::vector<std::vector<T>> g(k, std::vector<T>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i][j] = to_t(basis[i][j]);
    for (std::size_t j = 0; j < k; ++j) g[i][j] = to_t(gram(i, j));
  }

  BoxHits hits;
  std::vector<long> a(k, -bound);
  std::vector<T> x(n);
  T positive_cap = 0;
  T nonsquare_cap = 0;
  auto consider = [&](std::optional<std::pair<Key, IntVector>>& slot, const Integer& v2,
                      const IntVector& coords) {
    if (slot && std::get<0>(slot->first) < v2) return;
    Key key = key_of(v2, coords);
    if (!slot || key < slot->first) slot = std::make_pair(std::move(key), coords);
  };

  while (true) {
    T v2 = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      T row = 0;
      for (std::size_t j = 0; j < k; ++j) row += g[i][j] * T(a[j]);
      v2 += T(a[i]) * row;
    }
    const bool worth = v2 > 0 && !(hits.best_positive && v2 > positive_cap &&
                                   hits.best_nonsquare && v2 > nonsquare_cap);
    if (worth) {
      for (std::size_t j = 0; j < n; ++j) {
        x[j] = 0;
        for (std::size_t i = 0; i < k; ++i) x[j] += T(a[i]) * b[i][j];
      }
      const auto first = std::find_if(x.begin(), x.end(), [](const T& e) { return e != 0; });
      if (first != x.end() && *first > 0) {
        IntVector coords(n);
        for (std::size_t j = 0; j < n; ++j) coords[j] = Integer(x[j]);
        if (content(coords) == 1) {
          const Integer v2i(v2);
          consider(hits.best_positive, v2i, coords);
          if (!is_perfect_square(2 * v2i)) consider(hits.best_nonsquare, v2i, coords);
          if (hits.best_positive) positive_cap = to_t(std::get<0>(hits.best_positive->first));
          if (hits.best_nonsquare) nonsquare_cap = to_t(std::get<0>(hits.best_nonsquare->first));
        }
      }
    }
    std::size_t pos = 0;
    while (pos < k && a[pos] == bound) a[pos++] = -bound;
    if (pos == k) break;
    ++a[pos];
  }
  return hits;
}

Integer max_abs(const IntMatrix& m) {
  Integer out = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out = std::max(out, Integer(abs(m(i, j))));
  return out;
}

}  // namespace

Rank2Form Rank2Form::of(const K3LatticeModel& model, const MukaiVector& s, const MukaiVector& v) {
  const std::vector<MukaiVector> span{s, v};
  return {gram_matrix(model, span)};
}

MukaiVector find_positive_orthogonal(const K3LatticeModel& model, const MukaiVector& s,
                                     long search_bound) {
  require_spherical(model, s);
  if (search_bound < 1) throw InputError("search bound must be positive");

  const std::vector<MukaiVector> perp = orthogonal_complement_basis(model, std::span(&s, 1));
  std::vector<IntVector> basis;
  for (const auto& b : perp) basis.push_back(b.coordinates());
  const IntMatrix gram = gram_matrix(model, perp);

  // int64 is exact when |a^T G a| and every coordinate stay below 2^62
  Integer basis_max = 0;
  for (const auto& b : basis)
    for (const auto& e : b) basis_max = std::max(basis_max, Integer(abs(e)));
  const Integer kb = Integer(static_cast<long>(basis.size())) * search_bound;
  const Integer limit = Integer(1) << 62;
  const bool fits = kb * kb * max_abs(gram) < limit && kb * basis_max < limit;

  const BoxHits hits =
      fits ? scan_box<std::int64_t>(basis, gram, search_bound,
                                    [](const Integer& z) { return static_cast<std::int64_t>(z.get_si()); })
           : scan_box<Integer>(basis, gram, search_bound, [](const Integer& z) { return z; });

  if (hits.best_nonsquare) return MukaiVector::from_coordinates(hits.best_nonsquare->second);
  if (!hits.best_positive)
    throw SearchExhaustedError("no class with v^2 > 0 orthogonal to " + s.to_string() +
                               " within search bound " + std::to_string(search_bound));
  return perturb_to_nonsquare(model, s, MukaiVector::from_coordinates(hits.best_positive->second));
}

MukaiVector perturb_to_nonsquare(const K3LatticeModel& model, const MukaiVector& s,
                                 const MukaiVector& v) {
  require_spherical(model, s);
  if (mukai_pairing(model, v, s) != 0) throw InputError("v is not orthogonal to s");
  const Integer v2 = square(model, v);
  if (v2 <= 0) throw InputError("perturbation needs v^2 > 0");
  if (!is_perfect_square(2 * v2)) return canonical_sign(primitive_part(v));

  const std::vector<MukaiVector> pair{s, v};
  const std::vector<MukaiVector> w = orthogonal_complement_basis(model, pair);
  std::vector<MukaiVector> candidates = w;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      IntVector plus = w[i].coordinates();
      IntVector minus = plus;
      const IntVector y = w[j].coordinates();
      for (std::size_t t = 0; t < plus.size(); ++t) {
        plus[t] += y[t];
        minus[t] -= y[t];
      }
      candidates.push_back(MukaiVector::from_coordinates(plus));
      candidates.push_back(MukaiVector::from_coordinates(minus));
    }
  std::optional<std::pair<Key, MukaiVector>> best;
  for (const auto& u : candidates) {
    const Integer u2 = square(model, u);
    if (u2 == 0) continue;
    const MukaiVector cu = canonical_sign(u);
    Key key = key_of(abs(u2), cu.coordinates());
    if (!best || key < best->first) best = std::make_pair(std::move(key), cu);
  }
  // <s, v> is nondegenerate (det = -2 v^2), so its complement is too and
  // some basis vector or pairwise sum/difference has nonzero square
  if (!best) throw InvarianceError("complement of <s, v> has no anisotropic vector");
  const MukaiVector& u = best->second;

  const IntVector vx = v.coordinates();
  const IntVector ux = u.coordinates();
  for (long n = 1; n <= kPerturbationBudget; ++n) {
    IntVector wx(vx.size());
    for (std::size_t t = 0; t < vx.size(); ++t) wx[t] = n * vx[t] + ux[t];
    const MukaiVector cand = MukaiVector::from_coordinates(wx);
    const Integer c2 = square(model, cand);
    if (c2 > 0 && !is_perfect_square(2 * c2)) return canonical_sign(primitive_part(cand));
  }
  throw SearchExhaustedError("perturbation N v + u stayed square for N up to " +
                             std::to_string(kPerturbationBudget));
}

bool rank2_isotropy_free(const K3LatticeModel& model, const MukaiVector& s, const MukaiVector& v) {
  require_spherical(model, s);
  if (v.c.size() != model.picard_rank()) throw InputError("v has wrong NS length");
  if (mukai_pairing(model, v, s) != 0) throw InputError("v is not orthogonal to s");
  const Integer v2 = square(model, v);

  const bool by_square_test = !is_perfect_square(2 * v2);

  // (a s + b v)^2 = -2 a^2 + b^2 v^2; a nonzero solution exists iff one
  // exists with b in {1, 2}
  bool isotropic_found = v2 == 0;
  for (long b = 1; b <= 2 && !isotropic_found; ++b) {
    const Integer rhs = b * b * v2;
    if (rhs <= 0 || mpz_odd_p(rhs.get_mpz_t()) != 0) continue;
    if (exact_sqrt(rhs / 2)) isotropic_found = true;
  }
  if (by_square_test == isotropic_found)
    throw InvarianceError("isotropy search and square criterion disagree for v = " + v.to_string());
  return by_square_test;
}

AppendixSignatureReport appendix_signatures(const K3LatticeModel& model, const MukaiVector& s,
                                            std::span<const MukaiVector> negative_subspace) {
  require_spherical(model, s);
  AppendixSignatureReport out;
  out.full = signature_of(model.mukai_gram());
  const std::vector<MukaiVector> perp = orthogonal_complement_basis(model, std::span(&s, 1));
  out.s_perp = signature_of(gram_matrix(model, perp));
  out.s_alone = signature_of(gram_matrix(model, std::span(&s, 1)));
  out.degenerate = out.full.n_zero != 0 || out.s_perp.n_zero != 0;

  if (!negative_subspace.empty()) {
    const Signature sub = signature_of(gram_matrix(model, negative_subspace));
    if (sub.n_minus != sub.rank()) out.degenerate = true;

    std::vector<MukaiVector> span(negative_subspace.begin(), negative_subspace.end());
    span.push_back(s);
    out.span_with_s = signature_of(gram_matrix(model, span));
    if (out.span_with_s->n_zero != 0) out.degenerate = true;

    // classes sum x_i span_i with <sum x_i span_i, s> = 0
    IntMatrix row(1, span.size());
    for (std::size_t i = 0; i < span.size(); ++i) row(0, i) = mukai_pairing(model, span[i], s);
    std::vector<MukaiVector> in_span;
    for (const auto& x : integer_kernel(row)) {
      IntVector coords(model.dimension(), Integer(0));
      for (std::size_t i = 0; i < span.size(); ++i) {
        const IntVector si = span[i].coordinates();
        for (std::size_t t = 0; t < coords.size(); ++t) coords[t] += x[i] * si[t];
      }
      in_span.push_back(MukaiVector::from_coordinates(coords));
    }
    out.s_perp_in_span = signature_of(gram_matrix(model, in_span));
  }
  return out;
}

}  // namespace mukai
