#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "torusq/reference.hpp"

using namespace torusq;
using torusq::testing::max_abs;
using torusq::testing::random_map;
using torusq::testing::random_symbol;
using torusq::testing::random_symmetric_weight;
using torusq::testing::random_unit_vector;
using torusq::testing::random_values;
using torusq::testing::random_weight;

namespace {

OperatorMatrix diag(const std::vector<Complex>& v) {
  OperatorMatrix D(static_cast<int>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) D(static_cast<int>(k), static_cast<int>(k)) = v[k];
  return D;
}

// Columns are the Fourier basis vectors e_k.
OperatorMatrix fourier_synthesis(int d) {
  OperatorMatrix F(d);
  for (int k = 0; k < d; ++k) {
    const auto e = fourier_basis(d, k);
    for (int l = 0; l < d; ++l) F(l, k) = e[l];
  }
  return F;
}

Weight cs_weight(const FiducialSpec& spec, int d) { return Weight::coherent_state(realize_fiducial(spec, d)); }

}  // namespace

TEST_CASE("weight construction") {
  auto bad = random_map(4);
  bad(0, 0) = 0.9;
  CHECK_THROWS_AS(Weight::from_values(bad), InvalidArgument);
  CHECK(Weight::parity(3).provenance() == WeightProvenance::parity);
  const auto cs = cs_weight(fiducial::VonMises{1.0}, 4);
  CHECK(cs.provenance() == WeightProvenance::coherent_state);
  REQUIRE(cs.fiducial().has_value());
  CHECK(cs.is_symmetric(1e-12));
  CHECK(Weight::parity(5).is_symmetric(1e-12));
  // at even d the unit weight misses the adjoint signs, and M^w is not hermitian
  CHECK_FALSE(Weight::parity(4).is_symmetric());
  CHECK_FALSE(quantization_operator(Weight::parity(4)).is_hermitian());
  CHECK(random_symmetric_weight(6).is_symmetric(1e-12));
  CHECK_FALSE(random_weight(5).is_symmetric());
}

TEST_CASE("quantization operator") {
  // parity weight: (M psi)(l) = psi(-l)
  CHECK(max_abs_diff(quantization_operator(Weight::parity(5)), parity_matrix(5)) < 1e-12);

  const auto phi = realize_fiducial(fiducial::VonMises{1.0}, 4);
  CHECK(max_abs_diff(quantization_operator(Weight::coherent_state(phi)), OperatorMatrix::outer(phi, phi)) < 1e-12);

  for (int d : {1, 2, 3, 4, 5, 6}) {
    const auto w = random_weight(d);
    const auto M = quantization_operator(w);
    CHECK(max_abs_diff(M, reference::quantization_operator(w)) < 1e-12);
    CHECK(std::abs(M.trace() - 1.0) < 1e-12);
    CHECK(max_abs_diff(weight_from_operator(M).values(), w.values()) < 1e-12);
    CHECK(max_abs_diff(reference::weight_values(M), w.values()) < 1e-12);
  }
}

TEST_CASE("self-adjointness follows the symmetry condition") {
  for (int d : {2, 3, 4, 5, 6}) {
    CHECK(quantization_operator(random_symmetric_weight(d)).is_hermitian(1e-12));
    if (d > 1) CHECK(quantization_operator(random_weight(d)).hermiticity_residual() > 1e-3);
  }
}

TEST_CASE("weight retrieval") {
  const int d = 5;
  const auto phi = random_unit_vector(d);
  const auto w = weight_from_operator(OperatorMatrix::outer(phi, phi));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) CHECK(std::abs(w(m, n) - inner(displacement_apply(m, n, phi), phi)) < 1e-12);

  const auto wp = weight_from_operator(parity_matrix(3));
  CHECK(max_abs_diff(wp.values(), PhaseSpaceMap::constant(3, 1.0)) < 1e-12);

  CHECK_THROWS_AS(weight_from_operator(OperatorMatrix::identity(3)), InvalidArgument);
  const auto sym = random_symmetric_weight(5);
  CHECK(max_abs_diff(weight_from_operator(quantization_operator(sym)).values(), sym.values()) < 1e-12);
}

TEST_CASE("transported operators") {
  const auto M = quantization_operator(random_weight(4));
  CHECK(max_abs_diff(transported(M, {0, 0}), M) == 0.0);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const auto U = displacement_matrix(m, n, 4);
      CHECK(max_abs_diff(transported(M, {m, n}), U * M * U.adjoint()) < 1e-12);
    }

  const int d = 5;
  const auto Mw = quantization_operator(random_weight(d));
  OperatorMatrix sum(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) sum = sum + transported(Mw, {m, n});
  CHECK(max_abs_diff((1.0 / d) * sum, OperatorMatrix::identity(d)) < 1e-12);

  const auto psi = random_unit_vector(3);
  const auto P = OperatorMatrix::outer(psi, psi);
  for (int m = 0; m < 3; ++m)
    for (int n = 0; n < 3; ++n) {
      const auto cs = coherent_state(psi, {m, n});
      CHECK(max_abs_diff(transported(P, {m, n}), OperatorMatrix::outer(cs, cs)) < 1e-12);
    }
}

TEST_CASE("symplectic transform") {
  auto delta = PhaseSpaceMap::delta(4, 0, 0, 4.0);
  CHECK(max_abs_diff(symplectic_dft(PhaseSpaceMap::constant(4, 1.0)), delta) < 1e-12);
  for (int d : {1, 2, 3, 4, 5, 7}) {
    const auto f = random_map(d);
    CHECK(max_abs_diff(symplectic_dft(f), reference::symplectic_dft(f)) < 1e-12);
    CHECK(max_abs_diff(symplectic_dft(f, true), reference::symplectic_dft(f, true)) < 1e-12);
    CHECK(max_abs_diff(symplectic_dft(symplectic_dft(f)), f) < 1e-12);
    CHECK(max_abs_diff(symplectic_dft(symplectic_dft(f, true), true), f) < 1e-12);
    CHECK(max_abs_diff(symplectic_dft(symplectic_dft(f), true), point_reflection(f)) < 1e-12);
    CHECK(max_abs_diff(symplectic_dft(symplectic_dft(f, true)), point_reflection(f)) < 1e-12);
  }
}

TEST_CASE("quantization map: kernel path against direct sum") {
  for (int d : {1, 2, 3, 4, 5}) {
    for (const auto& w : {random_weight(d), random_symmetric_weight(d), Weight::parity(d)}) {
      const auto f = random_symbol(d);
      CHECK(max_abs_diff(quantize(f, w), reference::quantize(f, w)) < 1e-12);
      CHECK(max_abs_diff(quantize(ClassicalSymbol::general(PhaseSpaceMap::constant(d, 1.0)), w),
                         OperatorMatrix::identity(d)) < 1e-12);
    }
  }
}

TEST_CASE("parity weight special cases") {
  const int d = 5;
  const auto w = Weight::parity(d);
  const auto h = random_values(d);
  CHECK(max_abs_diff(quantize(ClassicalSymbol::position(h), w), diag(h)) < 1e-12);
  CHECK(max_abs_diff(quantize_position(h, w), diag(h)) < 1e-12);

  const auto F = fourier_synthesis(d);
  const auto g = random_values(d);
  CHECK(max_abs_diff(quantize(ClassicalSymbol::momentum(g), w), F * diag(g) * F.adjoint()) < 1e-12);

  std::vector<Complex> sq(d);
  for (int m = 0; m < d; ++m) sq[m] = double(m * m);
  CHECK(max_abs_diff(quantize_momentum(sq, w), F * diag(sq) * F.adjoint()) < 1e-12);
}

TEST_CASE("momentum and position fast paths") {
  for (int d : {2, 3, 4, 5}) {
    for (const auto& w : {random_weight(d), cs_weight(fiducial::VonMises{1.0}, d), Weight::parity(d)}) {
      const auto g = random_values(d);
      const auto h = random_values(d);
      CHECK(max_abs_diff(quantize_momentum(g, w), quantize(ClassicalSymbol::momentum(g), w)) < 1e-12);
      CHECK(max_abs_diff(quantize_position(h, w), quantize(ClassicalSymbol::position(h), w)) < 1e-12);
      CHECK(max_abs_diff(quantize_momentum(std::vector<Complex>(d, 1.0), w), OperatorMatrix::identity(d)) < 1e-12);
      CHECK(max_abs_diff(quantize_position(std::vector<Complex>(d, 1.0), w), OperatorMatrix::identity(d)) < 1e-12);
    }
  }
}

TEST_CASE("coherent-state quantization of momentum and position") {
  const int d = 5;
  const auto phi = realize_fiducial(fiducial::VonMises{1.0}, d);
  const auto w = Weight::coherent_state(phi);
  const auto phi_hat = dft(phi);

  // g(m) = m: A = sum_k (sum_m m |phi^(k - m)|^2) |e_k><e_k|
  std::vector<Complex> g(d);
  for (int m = 0; m < d; ++m) g[m] = double(m);
  std::vector<Complex> smoothed(d);
  for (int k = 0; k < d; ++k)
    for (int m = 0; m < d; ++m) smoothed[k] += g[m] * std::norm(phi_hat.at(k - m));
  const auto F = fourier_synthesis(d);
  CHECK(max_abs_diff(quantize_momentum(g, w), F * diag(smoothed) * F.adjoint()) < 1e-12);

  // h(n) = omega^n: multiplication by sum_n h(n) |phi(l - n)|^2
  const Phases ph(d);
  std::vector<Complex> h(d), mult(d);
  for (int n = 0; n < d; ++n) h[n] = ph.omega(n);
  for (int l = 0; l < d; ++l)
    for (int n = 0; n < d; ++n) mult[l] += h[n] * std::norm(phi.at(l - n));
  const auto A = quantize_position(h, w);
  CHECK(max_abs_diff(A, diag(mult)) < 1e-12);
  for (int l = 0; l < d; ++l) CHECK(std::abs(A(l, l)) < 1.0);
}

TEST_CASE("symbol shapes") {
  const auto g = random_values(4);
  const auto h = random_values(4);
  CHECK_NOTHROW(ClassicalSymbol::with_shape(ClassicalSymbol::momentum(g).values(), SymbolShape::momentum_only));
  CHECK_NOTHROW(ClassicalSymbol::with_shape(ClassicalSymbol::position(h).values(), SymbolShape::position_only));
  CHECK_NOTHROW(ClassicalSymbol::with_shape(ClassicalSymbol::separable(g, h).values(), SymbolShape::separable));
  CHECK_THROWS_AS(ClassicalSymbol::with_shape(random_map(4), SymbolShape::momentum_only), InvalidArgument);
  CHECK_THROWS_AS(ClassicalSymbol::with_shape(random_map(4), SymbolShape::position_only), InvalidArgument);
  CHECK_THROWS_AS(ClassicalSymbol::with_shape(random_map(4), SymbolShape::separable), InvalidArgument);
  CHECK(shift_symbol(ClassicalSymbol::momentum(g), {1, 2}).shape() == SymbolShape::momentum_only);
}

TEST_CASE("covariance") {
  CHECK(covariance_check(random_symbol(4), random_weight(4), {0, 0}) < 1e-12);
  CHECK(covariance_check(random_symbol(5), Weight::parity(5), {2, 3}) < 1e-12);
  CHECK(covariance_check(random_symbol(4), cs_weight(fiducial::VonMises{1.0}, 4), {1, 2}) < 1e-12);
  for (int d : {2, 3, 4, 5, 6})
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) CHECK(covariance_check(random_symbol(d), random_weight(d), {m, n}) < 1e-10);
}

TEST_CASE("Husimi identity for transported coherent-state projectors") {
  const int d = 5;
  const auto phi = random_unit_vector(d);
  const auto psi = random_unit_vector(d);
  const auto M = quantization_operator(Weight::coherent_state(phi));
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Complex lhs = inner(psi, transported(M, {m, n}).apply(psi));
      CHECK(std::abs(lhs - std::norm(inner(displacement_apply(m, n, phi), psi))) < 1e-12);
    }
}

TEST_CASE("positivity report") {
  const int d = 4;
  const auto cs = cs_weight(fiducial::VonMises{1.0}, d);

  // uniform probability on Gamma_d quantized as f = d P = 1/d
  const auto uniform = ClassicalSymbol::general(PhaseSpaceMap::constant(d, 1.0 / d));
  const auto r = positivity_report(uniform, cs);
  CHECK(r.positive_semidefinite);
  CHECK(r.trace == doctest::Approx(1.0));
  CHECK(r.is_density);
  CHECK(r.min_eigenvalue == doctest::Approx(1.0 / d));
  const auto scaled = positivity_report(ClassicalSymbol::general(PhaseSpaceMap::constant(d, 1.0)), cs);
  CHECK(scaled.is_density == false);  // identity has trace d
  CHECK(scaled.min_eigenvalue == doctest::Approx(1.0));

  // a random probability distribution quantized with a CS weight is a density
  PhaseSpaceMap p(d);
  double total = 0.0;
  for (auto& z : p.data()) {
    z = std::abs(torusq::testing::random_complex());
    total += z.real();
  }
  for (auto& z : p.data()) z *= d / total;
  const auto density = positivity_report(ClassicalSymbol::general(p), cs);
  CHECK(density.is_density);
  CHECK(density.trace == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(density.min_eigenvalue >= -1e-12);

  const auto id = positivity_report(ClassicalSymbol::general(PhaseSpaceMap::constant(d, 1.0)), Weight::parity(d));
  CHECK(id.positive_semidefinite);
  CHECK(id.trace == doctest::Approx(d));

  // a delta at the origin with a Kronecker-window weight has eigenvalue 1 only
  const auto negative = PhaseSpaceMap::delta(3, 0, 0, -3.0);
  const auto neg = positivity_report(ClassicalSymbol::general(negative), cs_weight(fiducial::VonMises{1.0}, 3));
  CHECK_FALSE(neg.positive_semidefinite);
  CHECK(neg.min_eigenvalue == doctest::Approx(-1.0));
  CHECK(std::abs(max_abs(PhaseSpaceMap::constant(2, 2.0)) - 2.0) < 1e-15);
}
