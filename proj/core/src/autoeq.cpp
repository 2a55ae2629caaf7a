#include "mukai/autoeq.hpp"

#include <utility>

#include "mukai/errors.hpp"

namespace mukai {

namespace {

void require_same_model(const Isometry& a, const Isometry& b) {
  if (!(a.model() == b.model())) throw InputError("isometries act on different lattices");
}

}  // namespace

Isometry::Isometry(K3LatticeModel model, IntMatrix matrix, std::string label)
    : model_(std::move(model)), matrix_(std::move(matrix)), label_(std::move(label)) {
  const std::size_t n = model_.dimension();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw InputError("isometry matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  const IntMatrix& g = model_.mukai_gram();
  if (!(matrix_.transpose() * g * matrix_ == g))
    throw InvarianceError("matrix does not preserve the Mukai pairing: " + label_);
}

Isometry Isometry::identity(const K3LatticeModel& model) {
  return {model, IntMatrix::identity(model.dimension()), "id"};
}

Integer Isometry::determinant() const { return mukai::determinant(matrix_); }

MukaiVector Isometry::apply(const MukaiVector& v) const {
  return MukaiVector::from_coordinates(matrix_.apply(v.coordinates()));
}

Isometry spherical_twist_action(const K3LatticeModel& model, const MukaiVector& s) {
  if (s.c.size() != model.picard_rank()) throw InputError("spherical class has wrong NS length");
  if (!is_spherical_class(model, s))
    throw PreconditionError("twist class " + s.to_string() + " has square " +
                            square(model, s).get_str() + ", expected -2");
  // M = I + s (G s)^T
  const IntVector sc = s.coordinates();
  const IntVector gs = model.mukai_gram().apply(sc);
  IntMatrix m = IntMatrix::identity(model.dimension());
  for (std::size_t i = 0; i < sc.size(); ++i)
    for (std::size_t j = 0; j < sc.size(); ++j) m(i, j) += sc[i] * gs[j];
  return {model, std::move(m), "T" + s.to_string()};
}

Isometry tensor_line_bundle_action(const K3LatticeModel& model, std::span<const Integer> divisor) {
  const std::size_t rho = model.picard_rank();
  if (divisor.size() != rho) throw InputError("divisor has wrong NS length");
  const Integer d2 = model.ns_product(divisor, divisor);
  if (mpz_odd_p(d2.get_mpz_t()) != 0) throw InputError("divisor has odd square");
  const IntVector gd = model.ns_gram().apply(divisor);

  const std::size_t n = rho + 2;
  IntMatrix m = IntMatrix::identity(n);
  // (r, c, m) -> (r, c + r D, m + c.D + r D^2/2)
  for (std::size_t j = 0; j < rho; ++j) {
    m(j + 1, 0) = divisor[j];
    m(n - 1, j + 1) = gd[j];
  }
  m(n - 1, 0) = d2 / 2;

  std::string label = "(x)O(";
  for (std::size_t j = 0; j < rho; ++j) label += (j ? "," : "") + divisor[j].get_str();
  label += ")";
  return {model, std::move(m), std::move(label)};
}

Isometry shift_action(const K3LatticeModel& model, long n) {
  const Integer sign = (n % 2 == 0) ? 1 : -1;
  return {model, sign * IntMatrix::identity(model.dimension()), "[" + std::to_string(n) + "]"};
}

Isometry compose(const Isometry& a, const Isometry& b) {
  require_same_model(a, b);
  return {a.model(), a.matrix() * b.matrix(), a.label() + " o " + b.label()};
}

Isometry inverse(const Isometry& a) {
  auto inv = unimodular_inverse(a.matrix());
  if (!inv) throw InvarianceError("isometry is not invertible over Z: " + a.label());
  return {a.model(), std::move(*inv), "(" + a.label() + ")^-1"};
}

Isometry power(const Isometry& a, long n) {
  Isometry base = n < 0 ? inverse(a) : a;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  IntMatrix result = IntMatrix::identity(a.model().dimension());
  IntMatrix b = base.matrix();
  while (e > 0) {
    if (e & 1UL) result = result * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return {a.model(), std::move(result), "(" + a.label() + ")^" + std::to_string(n)};
}

Isometry phi_h_full(const K3LatticeModel& model) {
  const Integer h2 = model.ns_gram()(0, 0);
  if (h2 <= 0) throw PreconditionError("first NS basis vector must be ample (H^2 > 0)");
  IntVector minus_h(model.picard_rank(), Integer(0));
  minus_h[0] = -1;
  const Isometry twist = spherical_twist_action(model, structure_sheaf_class(model));
  const Isometry tensor = tensor_line_bundle_action(model, minus_h);
  Isometry phi = compose(twist, tensor);
  return {model, phi.matrix(), "T_O o (x)O(-H)"};
}

std::vector<MukaiVector> polarized_sublattice_basis(const K3LatticeModel& model) {
  const std::size_t rho = model.picard_rank();
  MukaiVector h{Integer(0), IntVector(rho, Integer(0)), Integer(0)};
  h.c[0] = 1;
  return {MukaiVector{Integer(1), IntVector(rho, Integer(0)), Integer(0)}, h,
          MukaiVector{Integer(0), IntVector(rho, Integer(0)), Integer(1)}};
}

IntMatrix restrict_to_sublattice(const Isometry& a, std::span<const MukaiVector> basis) {
  std::vector<IntVector> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.c.size() != a.model().picard_rank()) throw InputError("basis vector has wrong NS length");
    cols.push_back(b.coordinates());
  }
  if (!spans_saturated_sublattice(cols))
    throw InputError("sublattice basis is dependent or not primitive");
  const IntMatrix b = IntMatrix::from_columns(cols);
  IntMatrix out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const IntVector image = a.matrix().apply(cols[j]);
    const auto x = solve_full_column_rank(b, image);
    if (!x) throw InvarianceError("image of basis vector " + std::to_string(j) + " leaves the span");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((*x)[i].get_den() != 1)
        throw InvarianceError("image of basis vector " + std::to_string(j) +
                              " is not an integral combination");
      out(i, j) = (*x)[i].get_num();
    }
  }
  return out;
}

bool fixes_pointwise(const Isometry& a, std::span<const MukaiVector> vs) {
  for (const auto& v : vs)
    if (!(a.apply(v) == v)) return false;
  return true;
}

}  // namespace mukai
