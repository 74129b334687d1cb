#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace torusq;
using torusq::testing::random_vector;

namespace {

OperatorMatrix mat2(Complex a, Complex b, Complex c, Complex e) {
  OperatorMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = e;
  return m;
}

OperatorMatrix U(std::int64_t m, std::int64_t n, int d) { return displacement_matrix(m, n, d); }

}  // namespace

TEST_CASE("group law") {
  const int d = 5;
  const GroupElement a(1.5, 2, 3, d);
  const auto e = GroupElement::identity(d);
  CHECK(same_element(group_mul(e, a), a));
  CHECK(same_element(group_mul(a, e), a));
  CHECK(same_element(group_mul(a, group_inv(a)), e));
  CHECK(same_element(group_mul(group_inv(a), a), e));

  const auto inv = group_inv(GroupElement(2.0, 1, 4, d));
  CHECK(inv.s() == doctest::Approx(-2.0));
  CHECK(inv.m() == 4);
  CHECK(inv.n() == 1);
  CHECK(same_element(group_inv(group_inv(a)), a));
  CHECK(same_element(group_inv(e), e));

  // (0,1,0)(0,0,1) at d=3: central term 1/2 plus the half period d/2 of the
  // Z_3-periodic phase convention.
  const auto p = group_mul(GroupElement(0, 1, 0, 3), GroupElement(0, 0, 1, 3));
  CHECK(p.m() == 1);
  CHECK(p.n() == 1);
  CHECK(same_element(p, GroupElement(2.0, 1, 1, 3)));
  CHECK_THROWS_AS(group_mul(GroupElement(0, 1, 0, 3), GroupElement(0, 0, 1, 4)), DimensionMismatch);
}

TEST_CASE("group_mul is associative and matches the representation") {
  for (int d : {2, 3, 4, 5, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> idx(0, d - 1);
      std::uniform_real_distribution<double> s(-3.0, 3.0);
      auto& g = torusq::testing::rng();
      const GroupElement a(s(g), idx(g), idx(g), d), b(s(g), idx(g), idx(g), d), c(s(g), idx(g), idx(g), d);
      CHECK(same_element(group_mul(group_mul(a, b), c), group_mul(a, group_mul(b, c)), 1e-9));
      CHECK(max_abs_diff(rep_V_matrix(a) * rep_V_matrix(b), rep_V_matrix(group_mul(a, b))) < 1e-12);
    }
  }
  const GroupElement g(0.7, 1, 2, 4);
  CHECK(max_abs_diff(rep_V_matrix(g).adjoint(), rep_V_matrix(group_inv(g))) < 1e-12);
  for (int d : {2, 3, 4, 6})
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) {
        const GroupElement h(0.3, m, n, d);
        CHECK(same_element(group_mul(h, group_inv(h)), GroupElement::identity(d)));
        CHECK(same_element(group_mul(group_inv(h), h), GroupElement::identity(d)));
      }
  const auto psi = random_vector(4);
  CHECK(max_abs_diff(rep_V(GroupElement::identity(4), psi), psi) < 1e-15);
}

TEST_CASE("displacement action") {
  CHECK(max_abs_diff(displacement_apply(0, 1, ZdVector::kronecker(3, 0)), ZdVector::kronecker(3, 1)) < 1e-15);
  const Complex i(0.0, 1.0);
  CHECK(max_abs_diff(displacement_apply(1, 1, ZdVector::kronecker(2, 0)), ZdVector::kronecker(2, 1).scaled(i)) < 1e-15);
  for (int d = 1; d <= 6; ++d) CHECK(max_abs_diff(U(0, 0, d), OperatorMatrix::identity(d)) == 0.0);

  const int d = 6;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const auto psi = random_vector(d);
      CHECK(max_abs_diff(U(m, n, d).apply(psi), displacement_apply(m, n, psi)) < 1e-12);
    }
  }
}

TEST_CASE("d = 2 displacement matrices") {
  const Complex i(0.0, 1.0);
  CHECK(max_abs_diff(U(0, 1, 2), mat2(0, 1, 1, 0)) < 1e-15);
  CHECK(max_abs_diff(U(1, 0, 2), mat2(1, 0, 0, -1)) < 1e-15);
  CHECK(max_abs_diff(U(1, 1, 2), mat2(0, -i, i, 0)) < 1e-15);
  // Fourier basis exchanges the roles of m and n.
  CHECK(max_abs_diff(displacement_matrix(0, 1, 2, BasisKind::fourier), mat2(1, 0, 0, -1)) < 1e-15);
  CHECK(max_abs_diff(displacement_matrix(1, 0, 2, BasisKind::fourier), mat2(0, 1, 1, 0)) < 1e-15);
}

TEST_CASE("Fourier-basis matrix is the change of basis of the Kronecker one") {
  for (int d : {2, 3, 4, 5}) {
    OperatorMatrix F(d);
    for (int k = 0; k < d; ++k) {
      const auto e = fourier_basis(d, k);
      for (int l = 0; l < d; ++l) F(l, k) = e[l];
    }
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        CHECK(max_abs_diff(F.adjoint() * U(m, n, d) * F, displacement_matrix(m, n, d, BasisKind::fourier)) < 1e-12);
  }
}

TEST_CASE("trace and orthogonality of displacements") {
  CHECK(std::abs(trace_U(0, 0, 5) - 5.0) < 1e-12);
  CHECK(std::abs(trace_U(1, 2, 5)) < 1e-12);
  CHECK(std::abs(trace_U(1, 1, 2)) < 1e-12);
  const int d = 5;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int mp = 0; mp < d; ++mp)
        for (int np = 0; np < d; ++np) {
          const Complex expected = (m == mp && n == np) ? Complex(d) : Complex(0.0);
          CHECK(std::abs(trace_of_product(U(m, n, d).adjoint(), U(mp, np, d)) - expected) < 1e-12);
        }
}

TEST_CASE("unitarity and adjoint") {
  for (int d = 2; d <= 12; ++d) {
    for (int m = 0; m < d; ++m) {
      for (int n = 0; n < d; ++n) {
        const auto u = U(m, n, d);
        CHECK(u.unitarity_residual() < 1e-12);
        const double sigma = adjoint_sign(m, n, d);
        CHECK(max_abs_diff(U(-m, -n, d), Complex(sigma) * u.adjoint()) < 1e-12);
        if (d % 2 == 1) CHECK(sigma == 1.0);
      }
    }
  }
  // U(1,1) is hermitian at d=2; at d=4, U(3,2) = -U(1,2)^dag.
  CHECK(adjoint_sign(1, 1, 2) == 1);
  CHECK(adjoint_sign(1, 2, 4) == -1);
}

TEST_CASE("composition") {
  const auto c0 = compose_check({0, 0}, {2, 1}, 3);
  CHECK(std::abs(c0.phase - 1.0) < 1e-15);
  CHECK(c0.point == PhasePoint{2, 1});

  const Phases ph3(3);
  const auto c1 = compose_check({1, 0}, {0, 1}, 3);
  CHECK(std::abs(c1.phase - std::polar(1.0, 4.0 * std::numbers::pi / 3.0)) < 1e-15);
  CHECK(c1.point == PhasePoint{1, 1});
  const auto c2 = compose_check({0, 1}, {1, 0}, 3);
  CHECK(std::abs(c2.phase - std::polar(1.0, -4.0 * std::numbers::pi / 3.0)) < 1e-15);

  for (int d : {3, 4, 5}) {
    const Phases ph(d);
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        for (int mp = 0; mp < d; ++mp)
          for (int np = 0; np < d; ++np) {
            const auto c = compose_check({m, n}, {mp, np}, d);
            CHECK(max_abs_diff(U(m, n, d) * U(mp, np, d), c.phase * U(c.point.m, c.point.n, d)) < 1e-12);
            // the phase is always omega^{(mn' - nm')/2} up to a sign
            const Complex ratio = c.phase / ph.half(static_cast<std::int64_t>(m) * np - static_cast<std::int64_t>(n) * mp);
            CHECK(std::abs(std::abs(ratio.real()) - 1.0) < 1e-12);
            const auto lhs = U(mp, np, d) * U(m, n, d) * U(mp, np, d).adjoint();
            CHECK(max_abs_diff(lhs, conjugation_phase({m, n}, {mp, np}, d) * U(m, n, d)) < 1e-12);
          }
  }
}

TEST_CASE("parity matrix") {
  const auto P = parity_matrix(5);
  const auto psi = random_vector(5);
  const auto out = P.apply(psi);
  for (int l = 0; l < 5; ++l) CHECK(out[l] == psi.at(-l));
  CHECK(max_abs_diff(P * P, OperatorMatrix::identity(5)) == 0.0);
}
