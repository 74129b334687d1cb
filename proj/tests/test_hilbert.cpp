#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace torusq;
using torusq::testing::random_vector;
using torusq::testing::vec;

TEST_CASE("inner product") {
  CHECK(std::abs(inner(ZdVector::kronecker(4, 0), ZdVector::kronecker(4, 0)) - 1.0) < 1e-15);
  CHECK(std::abs(inner(fourier_basis(5, 1), fourier_basis(5, 3))) < 1e-15);
  const Complex i(0.0, 1.0);
  // conj(1) i + conj(i) 1 = i - i
  CHECK(std::abs(inner(vec({1.0, i, 0.0}), vec({i, 1.0, 0.0}))) < 1e-15);
  CHECK(std::abs(inner(vec({i, 0.0, 0.0}), vec({1.0, 0.0, 0.0})) + i) < 1e-15);
  CHECK_THROWS_AS(inner(ZdVector::zeros(3), ZdVector::zeros(4)), DimensionMismatch);
}

TEST_CASE("fourier basis vectors") {
  CHECK(max_abs_diff(fourier_basis(1, 0), vec({1.0})) < 1e-15);
  CHECK(max_abs_diff(fourier_basis(4, 0), vec({0.5, 0.5, 0.5, 0.5})) < 1e-15);
  const Complex i(0.0, 1.0);
  CHECK(max_abs_diff(fourier_basis(4, 1), vec({0.5, 0.5 * i, -0.5, -0.5 * i})) < 1e-15);
  CHECK_THROWS_AS(fourier_basis(4, 4), InvalidArgument);
  CHECK_THROWS_AS(fourier_basis(4, -1), InvalidArgument);

  for (int d : {1, 2, 5, 8}) {
    auto sum = OperatorMatrix::zeros(d);
    for (int k = 0; k < d; ++k) sum = sum + OperatorMatrix::outer(fourier_basis(d, k), fourier_basis(d, k));
    CHECK(max_abs_diff(sum, OperatorMatrix::identity(d)) < 1e-12);
  }
}

TEST_CASE("dft and idft") {
  const auto flat = ZdVector(std::vector<Complex>(5, 1.0 / std::sqrt(5.0)));
  CHECK(max_abs_diff(dft(flat), ZdVector::kronecker(5, 0)) < 1e-15);
  CHECK(max_abs_diff(dft(ZdVector::kronecker(5, 0)), flat) < 1e-15);
  for (int k0 = 0; k0 < 6; ++k0) CHECK(max_abs_diff(dft(fourier_basis(6, k0)), ZdVector::kronecker(6, k0)) < 1e-14);

  const auto phi = random_vector(7);
  CHECK(max_abs_diff(idft(dft(phi)), phi) < 1e-12);
  CHECK(max_abs_diff(dft(idft(phi)), phi) < 1e-12);
  CHECK(max_abs_diff(idft(ZdVector::kronecker(6, 2)), fourier_basis(6, 2)) < 1e-15);
  CHECK(max_abs_diff(idft(ZdVector::kronecker(4, 0)), vec({0.5, 0.5, 0.5, 0.5})) < 1e-15);
}

TEST_CASE("parseval and order four") {
  for (int d = 1; d <= 32; ++d) {
    const auto a = random_vector(d);
    const auto b = random_vector(d);
    CHECK(std::abs(inner(dft(a), dft(b)) - inner(a, b)) < 1e-12);
    CHECK(max_abs_diff(dft(dft(dft(dft(a)))), a) < 1e-12);
  }
}

TEST_CASE("translate and modulate") {
  CHECK(max_abs_diff(translate(ZdVector::kronecker(3, 0), 1), ZdVector::kronecker(3, 1)) == 0.0);
  CHECK(max_abs_diff(translate(vec({1.0, 2.0, 3.0}), 2), vec({2.0, 3.0, 1.0})) == 0.0);
  const auto phi = random_vector(5);
  CHECK(max_abs_diff(translate(phi, 5), phi) == 0.0);
  CHECK(max_abs_diff(translate(translate(phi, 3), 4), translate(phi, 7)) == 0.0);
  CHECK(max_abs_diff(translate(phi, -1), translate(phi, 4)) == 0.0);

  CHECK(max_abs_diff(modulate(phi, 0), phi) == 0.0);
  const Phases ph(5);
  CHECK(max_abs_diff(modulate(ZdVector::kronecker(5, 3), 2), ZdVector::kronecker(5, 3).scaled(ph.omega(6))) < 1e-15);
  CHECK(max_abs_diff(dft(modulate(phi, 2)), translate(dft(phi), 2)) < 1e-12);

  for (int k0 = 0; k0 < 5; ++k0)
    for (int l0 = 0; l0 < 5; ++l0)
      CHECK(max_abs_diff(translate(modulate(phi, k0), l0),
                         modulate(translate(phi, l0), k0).scaled(ph.omega(-k0 * l0))) < 1e-12);
}

TEST_CASE("vector invariants") {
  CHECK_THROWS_AS(ZdVector(std::vector<Complex>{}), InvalidArgument);
  CHECK_THROWS_AS(ZdVector::zeros(3).normalized(), InvalidArgument);
  const auto phi = random_vector(4);
  CHECK(phi.at(-1) == phi[3]);
  CHECK(phi.at(9) == phi[1]);
  CHECK(std::abs(phi.normalized().norm() - 1.0) < 1e-15);
}
