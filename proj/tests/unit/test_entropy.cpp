#include <doctest.h>

#include <cmath>

#include "mukai/entropy.hpp"
#include "mukai/errors.hpp"

using namespace mukai;

namespace {

MukaiVector line_bundle(long k, long d) { return MukaiVector{Integer(1), {Integer(k)}, Integer(k * k * d + 1)}; }

Integer pow_int(long base, long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("twist_entropy_curve examples") {
  const EntropyCurve c = twist_entropy_curve(2, Complement::kNonempty);
  CHECK(c.eval(Rational(-1)) == 1);
  CHECK(c.eval(Rational(3)) == 0);
  CHECK(c.eval(Rational(0)) == 0);
  CHECK(c.proven_at(Rational(3)));
  CHECK(c.eval(make_rational(-7, 3)) == make_rational(7, 3));

  const EntropyCurve c1 = twist_entropy_curve(1, Complement::kEmpty);
  CHECK(c1.eval(Rational(-2)) == 0);
  CHECK(c1.proven_at(Rational(5)));

  for (long d = 1; d <= 6; ++d)
    for (auto comp : {Complement::kNonempty, Complement::kEmpty, Complement::kUnknown})
      CHECK(twist_entropy_curve(d, comp).eval(Rational(0)) == 0);

  CHECK_THROWS_AS(twist_entropy_curve(0, Complement::kNonempty), InputError);
}

TEST_CASE("unproven branch for d >= 2 without a known complement") {
  for (long d = 2; d <= 5; ++d)
    for (auto comp : {Complement::kEmpty, Complement::kUnknown}) {
      const EntropyCurve c = twist_entropy_curve(d, comp);
      CHECK_FALSE(c.proven_at(Rational(1)));
      CHECK(c.eval(Rational(1)) == 0);
      CHECK(c.proven_at(Rational(-1)));
      CHECK(c.proven_at(Rational(0)));
      CHECK(c.eval(Rational(-1)) == d - 1);
    }
}

TEST_CASE("curves are continuous with nondecreasing slopes") {
  for (long d = 1; d <= 8; ++d)
    for (auto comp : {Complement::kNonempty, Complement::kEmpty, Complement::kUnknown}) {
      const EntropyCurve c = twist_entropy_curve(d, comp);
      const auto& pieces = c.pieces();
      REQUIRE_FALSE(pieces.empty());
      CHECK_FALSE(pieces.front().lower);
      CHECK_FALSE(pieces.back().upper);
      for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        REQUIRE(pieces[i].upper);
        REQUIRE(pieces[i + 1].lower);
        CHECK(*pieces[i].upper == *pieces[i + 1].lower);
        const Rational b = *pieces[i].upper;
        CHECK(pieces[i].slope * b + pieces[i].intercept == pieces[i + 1].slope * b + pieces[i + 1].intercept);
        CHECK(pieces[i].slope <= pieces[i + 1].slope);
      }
      for (long num = -40; num <= 40; ++num) {
        const Rational t = make_rational(num, 7);
        CHECK(c.eval(t) == (t <= 0 ? Rational(1 - d) * t : Rational(0)));
      }
    }
}

TEST_CASE("EntropyCurve rejects gaps and jumps") {
  CurvePiece left{std::nullopt, Rational(0), Rational(-1), Rational(0), true};
  CurvePiece right{Rational(1), std::nullopt, Rational(0), Rational(0), true};
  CHECK_THROWS_AS(EntropyCurve({left, right}), InputError);
  CurvePiece jump{Rational(0), std::nullopt, Rational(0), Rational(1), true};
  CHECK_THROWS_AS(EntropyCurve({left, jump}), InvarianceError);
  CurvePiece ok{Rational(0), std::nullopt, Rational(0), Rational(0), true};
  CHECK_NOTHROW(EntropyCurve({left, ok}));
}

TEST_CASE("h0_line_bundle") {
  for (long d = 1; d <= 10; ++d) CHECK(h0_line_bundle(1, d) == d + 2);
  CHECK(h0_line_bundle(2, 2) == 10);
  CHECK(h0_line_bundle(1, 5) == 7);
  // lattice oracle: chi(O, O(kH)) = -<v(O), v(O(kH))>
  for (long d = 1; d <= 10; ++d) {
    const auto model = K3LatticeModel::of_degree(d);
    for (long k = 1; k <= 6; ++k)
      CHECK(h0_line_bundle(k, d) == euler_pairing(model, structure_sheaf_class(model), line_bundle(k, d)));
  }
  CHECK_THROWS_AS(h0_line_bundle(0, 2), InputError);
  CHECK_THROWS_AS(h0_line_bundle(-1, 2), InputError);
  CHECK_THROWS_AS(h0_line_bundle(1, 0), InputError);
}

TEST_CASE("ext_top_dim examples and recursion") {
  CHECK(ext_top_dim(0, 1, 1, 2) == 10);
  CHECK(ext_top_dim(1, 1, 1, 2) == 40);
  CHECK_THROWS_AS(ext_top_dim(-1, 1, 1, 2), InputError);
  CHECK_THROWS_AS(ext_top_dim(0, 0, 1, 2), InputError);
  CHECK_THROWS_AS(ext_top_dim(0, 1, 0, 2), InputError);
  for (long d = 1; d <= 10; ++d)
    for (long i = 1; i <= 5; ++i)
      for (long k = 1; k <= 5; ++k) {
        CHECK(ext_top_dim(0, i, k, d) == Integer((i + k) * (i + k) * d + 2));
        CHECK(ext_top_dim(1, i, k, d) == h0_line_bundle(i + 1, d) * h0_line_bundle(k, d));
        Integer prev = ext_top_dim(1, i, k, d);
        for (long n = 2; n <= 60; ++n) {
          const Integer cur = ext_top_dim(n, i, k, d);
          CHECK(cur == prev * h0_line_bundle(1, d));
          CHECK(cur >= 1);
          prev = cur;
        }
      }
}

TEST_CASE("growth ratio is log(d+2) from n = 2 on") {
  for (long d = 1; d <= 10; ++d)
    for (long n = 2; n <= 20; ++n) {
      const Rational ratio = make_rational(ext_top_dim(n, 1, 1, d), ext_top_dim(n - 1, 1, 1, d));
      CHECK(ratio == d + 2);
    }
}

TEST_CASE("delta_prime_lower_bound") {
  CHECK(delta_prime_lower_bound(0, 1, 2).value == 10);
  CHECK(delta_prime_lower_bound(0, 1, 2).paper_bound == 1);
  CHECK(delta_prime_lower_bound(3, 1, 2).value == 640);
  CHECK(delta_prime_lower_bound(3, 1, 2).paper_bound == 64);
  for (long d = 1; d <= 10; ++d)
    for (long n = 0; n <= 60; ++n)
      for (long i = 1; i <= 3; ++i) {
        const DeltaPrimeBound b = delta_prime_lower_bound(n, i, d);
        CHECK(b.paper_bound == pow_int(d + 2, n));
        CHECK(b.value >= b.paper_bound);
        CHECK(b.value == ext_top_dim(n, i, 1, d));
      }
}

// (1/n) log of the bound is log(d+2) + log(4d+2)/n for i = 1: the rate converges
// to log(d+2) with an explicit 1/n term
TEST_CASE("growth rate of delta_prime_lower_bound") {
  auto log_of = [](const Integer& v) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  };
  for (long d = 1; d <= 10; ++d) {
    for (long n : {1L, 10L, 50L, 60L, 400L}) {
      const double rate = log_of(delta_prime_lower_bound(n, 1, d).value) / static_cast<double>(n);
      CHECK(rate - std::log(d + 2.0) == doctest::Approx(std::log(4.0 * d + 2.0) / static_cast<double>(n)));
    }
    CHECK(log_of(delta_prime_lower_bound(400, 1, d).value) / 400.0 - std::log(d + 2.0) < 0.02);
  }
}

TEST_CASE("chi_iterate") {
  CHECK(chi_iterate(0, 1, 1, 2) == 10);
  CHECK(chi_iterate(0, 1, 2, 2) == 20);
  const Integer chi1 = chi_iterate(1, 1, 1, 2);
  CHECK(chi1 + ext_top_dim(1, 1, 1, 2) >= 0);
  for (long d = 1; d <= 10; ++d)
    for (long i = 1; i <= 5; ++i)
      for (long k = 1; k <= 5; ++k) {
        CHECK(chi_iterate(0, i, k, d) == Integer((i + k) * (i + k) * d + 2));
        CHECK(chi_iterate(0, i, k, d) == ext_top_dim(0, i, k, d));
      }
  // a model of higher Picard rank with the same H gives the same numbers
  const K3LatticeModel rank2(IntMatrix{{4, 0}, {0, -4}});
  for (long n = 0; n <= 6; ++n) CHECK(chi_iterate(n, 1, 1, 2, rank2) == chi_iterate(n, 1, 1, 2));
  CHECK_THROWS_AS(chi_iterate(0, 1, 1, 3, K3LatticeModel::of_degree(2)), InputError);
}

TEST_CASE("ext_recursion_table") {
  const auto rows = ext_recursion_table(2, 1, 1, 3);
  REQUIRE(rows.size() == 4);
  const long top[] = {10, 40, 160, 640};
  for (std::size_t n = 0; n < rows.size(); ++n) {
    CHECK(rows[n].n == static_cast<long>(n));
    CHECK(rows[n].top_degree == static_cast<long>(n) + 2);
    CHECK(rows[n].vanishing_lo == 2);
    CHECK(rows[n].vanishing_hi == static_cast<long>(n) + 2);
    CHECK(rows[n].top_dim == top[n]);
    CHECK(rows[n].paper_bound == pow_int(4, static_cast<long>(n)));
    CHECK(rows[n].chi == chi_iterate(static_cast<long>(n), 1, 1, 2));
  }
}

TEST_CASE("gy_gap") {
  const GromovYomdinGap g2 = gy_gap(2);
  CHECK(g2.lower_bound == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(g2.log_rho == 0.0);
  CHECK(g2.gap == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(g2.certified_positive);

  const GromovYomdinGap g1 = gy_gap(1);
  CHECK(g1.lower_bound == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(g1.log_rho == 0.0);

  const GromovYomdinGap g5 = gy_gap(5);
  CHECK(g5.lower_bound == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(g5.log_rho == doctest::Approx(std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
  CHECK(std::abs(g5.gap - 0.983486498936) < 1e-9);
  CHECK(g5.rho == rho_closed_form(5));

  CHECK_THROWS_AS(gy_gap(0), InputError);
}

TEST_CASE("gy_gap is certified positive for d in [1, 10^4]") {
  for (long d = 1; d <= 10000; ++d) {
    const GromovYomdinGap g = gy_gap(d);
    CHECK(g.certified_positive);
    CHECK(g.gap > 0.0);
    // exact oracle: rho - (d+2) < 0
    CHECK((g.rho <=> Rational(d + 2)) == std::strong_ordering::less);
  }
}

TEST_CASE("kst_lower_bound") {
  const auto m5 = K3LatticeModel::of_degree(5);
  CHECK(kst_lower_bound(Isometry::identity(m5)) == doctest::Approx(0.0));
  CHECK(std::abs(kst_lower_bound(phi_h_full(m5)) - std::log((3.0 + std::sqrt(5.0)) / 2.0)) < 1e-9);
  CHECK(kst_lower_bound(shift_action(m5, 1)) == doctest::Approx(0.0));
  for (long d = 1; d <= 30; ++d) {
    const GromovYomdinGap g = gy_gap(d);
    const double kst = kst_lower_bound(phi_h_full(K3LatticeModel::of_degree(d)));
    CHECK(std::abs(kst - g.log_rho) < 1e-8);
    CHECK(kst < g.lower_bound);
  }
}

}  // TEST_SUITE
