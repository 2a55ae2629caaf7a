#include "mukai/lattice.hpp"

#include <sstream>
#include <utility>

#include "mukai/errors.hpp"

namespace mukai {

namespace {

void check_shape(const K3LatticeModel& model, const MukaiVector& v) {
  if (v.c.size() != model.picard_rank())
    throw InputError("Mukai vector has " + std::to_string(v.c.size()) +
                     " NS coordinates, lattice has Picard rank " +
                     std::to_string(model.picard_rank()));
}

}  // namespace

K3LatticeModel::K3LatticeModel(IntMatrix ns_gram) : ns_gram_(std::move(ns_gram)) {
  const std::size_t rho = ns_gram_.rows();
  if (rho == 0) throw InputError("Picard rank must be positive");
  if (!ns_gram_.is_symmetric()) throw InputError("NS Gram matrix is not symmetric");
  for (std::size_t i = 0; i < rho; ++i)
    if (mpz_odd_p(ns_gram_(i, i).get_mpz_t()) != 0)
      throw InputError("NS Gram matrix is not even (odd diagonal entry)");
  const Signature sig = signature_of(ns_gram_);
  if (sig.n_zero != 0) throw InputError("NS Gram matrix is degenerate");
  if (sig.n_plus != 1)
    throw InputError("NS Gram matrix must have signature (1, rho-1), got (" +
                     std::to_string(sig.n_plus) + ", " + std::to_string(sig.n_minus) + ")");

  const std::size_t n = rho + 2;
  mukai_gram_ = IntMatrix(n, n);
  mukai_gram_(0, n - 1) = -1;
  mukai_gram_(n - 1, 0) = -1;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j) mukai_gram_(i + 1, j + 1) = ns_gram_(i, j);
}

K3LatticeModel K3LatticeModel::of_degree(long d) {
  if (d < 1) throw InputError("polarisation degree d must be positive (H^2 = 2d)");
  IntMatrix g(1, 1);
  g(0, 0) = 2 * d;
  return K3LatticeModel(std::move(g));
}

Integer K3LatticeModel::ns_product(std::span<const Integer> c1,
                                   std::span<const Integer> c2) const {
  if (c1.size() != picard_rank() || c2.size() != picard_rank())
    throw InputError("NS vector length does not match Picard rank");
  Integer s = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i] == 0) continue;
    for (std::size_t j = 0; j < c2.size(); ++j) s += c1[i] * ns_gram_(i, j) * c2[j];
  }
  return s;
}

MukaiVector MukaiVector::from_coordinates(std::span<const Integer> x) {
  if (x.size() < 3) throw InputError("Mukai coordinates need at least 3 entries");
  return {x.front(), IntVector(x.begin() + 1, x.end() - 1), x.back()};
}

IntVector MukaiVector::coordinates() const {
  IntVector x;
  x.reserve(c.size() + 2);
  x.push_back(r);
  x.insert(x.end(), c.begin(), c.end());
  x.push_back(m);
  return x;
}

std::string MukaiVector::to_string() const {
  std::ostringstream os;
  os << '(' << r.get_str() << ", ";
  if (c.size() == 1) {
    os << c[0].get_str();
  } else {
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i].get_str();
    os << ']';
  }
  os << ", " << m.get_str() << ')';
  return os.str();
}

MukaiVector structure_sheaf_class(const K3LatticeModel& model) {
  return {Integer(1), IntVector(model.picard_rank(), Integer(0)), Integer(1)};
}

Integer mukai_pairing(const K3LatticeModel& model, const MukaiVector& v, const MukaiVector& w) {
  check_shape(model, v);
  check_shape(model, w);
  return model.ns_product(v.c, w.c) - v.r * w.m - w.r * v.m;
}

Integer euler_pairing(const K3LatticeModel& model, const MukaiVector& v, const MukaiVector& w) {
  return -mukai_pairing(model, v, w);
}

Integer square(const K3LatticeModel& model, const MukaiVector& v) {
  return mukai_pairing(model, v, v);
}

bool is_spherical_class(const K3LatticeModel& model, const MukaiVector& v) {
  return square(model, v) == -2;
}

bool is_twice_square_free(const K3LatticeModel& model, const MukaiVector& v) {
  return !is_perfect_square(2 * square(model, v));
}

IntMatrix gram_matrix(const K3LatticeModel& model, std::span<const MukaiVector> vs) {
  IntMatrix g(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) {
      g(i, j) = mukai_pairing(model, vs[i], vs[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

Signature signature_of(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw InputError("signature_of: matrix is not symmetric");
  const std::size_t n = gram.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram(i, j);

  // simultaneous row/column operations keep the form congruent
  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  auto add_index = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    for (std::size_t i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
  };

  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][p] == 0) ++p;
      if (p < n) {
        swap_index(k, p);
      } else {
        std::size_t q = k + 1;
        while (q < n && a[k][q] == 0) ++q;
        if (q == n) {
          ++sig.n_zero;  // a[k] is identically zero on the remaining block
          continue;
        }
        // all remaining diagonals vanish, so a[k][k] becomes 2 a[k][q] != 0
        add_index(k, q, Rational(1));
      }
    }
    const Rational pivot = a[k][k];
    (pivot > 0 ? sig.n_plus : sig.n_minus)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      add_index(i, k, -a[i][k] / pivot);
    }
  }
  return sig;
}

std::vector<MukaiVector> orthogonal_complement_basis(const K3LatticeModel& model,
                                                     std::span<const MukaiVector> vs) {
  const std::size_t n = model.dimension();
  IntMatrix constraints(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    check_shape(model, vs[i]);
    const IntVector row = model.mukai_gram().apply(vs[i].coordinates());
    for (std::size_t j = 0; j < n; ++j) constraints(i, j) = row[j];
  }
  std::vector<IntVector> kernel;
  if (vs.empty()) {
    for (std::size_t j = 0; j < n; ++j) kernel.push_back(IntMatrix::identity(n).column(j));
  } else {
    kernel = integer_kernel(constraints);
    size_reduce(kernel);
  }
  std::vector<MukaiVector> out;
  out.reserve(kernel.size());
  for (const auto& x : kernel) out.push_back(MukaiVector::from_coordinates(x));
  return out;
}

MukaiVector primitive_part(const MukaiVector& v) {
  IntVector x = v.coordinates();
  const Integer g = content(x);
  if (g <= 1) return v;
  for (auto& e : x) e /= g;
  return MukaiVector::from_coordinates(x);
}

}  // namespace mukai
