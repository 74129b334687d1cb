#include "torusq/distributions.hpp"

#include <algorithm>
#include <cmath>

namespace torusq {

namespace {

void require_odd(int d) {
  if (d % 2 == 0) throw PreconditionViolation("Wigner via parity requires odd dimension, got d=" + std::to_string(d));
}

// Imaginary parts scale with the state's mass; compare them relative to it.
RealPhaseSpaceMap realize_scaled(const PhaseSpaceMap& map, double mass) {
  return realize(map, 1e-12 * std::max(1.0, mass));
}

}  // namespace

RealPhaseSpaceMap husimi(const ZdVector& psi, const ZdVector& phi) {
  require_same_dim(psi.dim(), phi.dim(), "husimi");
  if (std::abs(phi.norm() - 1.0) > 1e-8) throw InvalidArgument("husimi: fiducial must have unit norm");
  const int d = psi.dim();
  const auto coeffs = gabor_transform(psi, phi);
  RealPhaseSpaceMap h(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) h(m, n) = std::norm(coeffs(m, n)) / d;
  return h;
}

RealPhaseSpaceMap wigner(const ZdVector& psi) {
  const int d = psi.dim();
  require_odd(d);
  const Phases ph(d);
  PhaseSpaceMap w(d);
#pragma omp parallel for schedule(static)
  for (int n = 0; n < d; ++n) {
    std::vector<Complex> products(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) products[l] = std::conj(psi.at(n + l)) * psi.at(n - l);
    for (int m = 0; m < d; ++m) {
      Complex s = 0.0;
      for (int l = 0; l < d; ++l) s += ph.omega(2 * static_cast<std::int64_t>(m) * l) * products[l];
      w(m, n) = s / static_cast<double>(d);
    }
  }
  return realize_scaled(w, psi.norm_squared());
}

RealPhaseSpaceMap wigner_half_argument(const ZdVector& psi) {
  const int d = psi.dim();
  require_odd(d);
  const Phases ph(d);
  const std::int64_t inv2 = (d + 1) / 2;
  PhaseSpaceMap w(d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k) {
        const std::int64_t half_k = mod(k * inv2, d);
        s += ph.omega(static_cast<std::int64_t>(m) * k) * std::conj(psi.at(n + half_k)) * psi.at(n - half_k);
      }
      w(m, n) = s / static_cast<double>(d);
    }
  }
  return realize_scaled(w, psi.norm_squared());
}

PhaseSpaceMap portrait(const OperatorMatrix& A, const Weight& w) {
  require_same_dim(A.dim(), w.dim(), "portrait");
  const int d = A.dim();
  const Phases ph(d);
  PhaseSpaceMap wt(d);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      // Tr[A U(m,n)] = sum_k' A(k', k'+n) chi omega^{m(k'+n)}
      Complex s = 0.0;
      for (int kp = 0; kp < d; ++kp) {
        const auto k = mod(kp + n, d);
        s += A(kp, static_cast<int>(k)) * ph.omega(m * k);
      }
      wt(m, n) = w(m, n) * ph.chi(m, n) * s;
    }
  }
  return symplectic_dft(wt);
}

PhaseSpaceMap overlap_kernel(const Weight& w) {
  const int d = w.dim();
  PhaseSpaceMap g(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) g(m, n) = w(m, n) * static_cast<double>(adjoint_sign(m, n, d)) * w.at(-m, -n);
  auto D = symplectic_dft(g);
  for (auto& z : D.data()) z /= static_cast<double>(d);
  return D;
}

RealPhaseSpaceMap overlap_distribution(const Weight& w) { return realize(overlap_kernel(w)); }

PhaseSpaceMap portrait_of_symbol(const ClassicalSymbol& f, const Weight& w) {
  require_same_dim(f.dim(), w.dim(), "portrait_of_symbol");
  const int d = f.dim();
  const auto D = overlap_kernel(w);
  PhaseSpaceMap out(d);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      Complex s = 0.0;
      for (int mp = 0; mp < d; ++mp)
        for (int np = 0; np < d; ++np) s += f.values().at(m - mp, n - np) * D(mp, np);
      out(m, n) = s;
    }
  }
  return out;
}

}  // namespace torusq
