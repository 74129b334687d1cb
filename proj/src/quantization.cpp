#include "torusq/quantization.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace torusq {

namespace {

constexpr double kUnitTraceTol = 1e-10;

}  // namespace

Weight::Weight(PhaseSpaceMap values, WeightProvenance provenance, std::optional<ZdVector> fiducial)
    : values_(std::move(values)), provenance_(provenance), fiducial_(std::move(fiducial)) {
  const Complex w00 = values_(0, 0);
  if (std::abs(w00 - 1.0) > kUnitTraceTol) {
    throw InvalidArgument("weight must satisfy w(0,0) = 1, got (" + std::to_string(w00.real()) + ", " +
                          std::to_string(w00.imag()) + ")");
  }
}

Weight Weight::parity(int d) { return {PhaseSpaceMap::constant(d, 1.0), WeightProvenance::parity, std::nullopt}; }

Weight Weight::coherent_state(const ZdVector& phi) {
  // <U(q) phi|phi> is the Gabor coefficient of phi against itself.
  return {gabor_transform(phi, phi), WeightProvenance::coherent_state, phi};
}

Weight Weight::from_values(PhaseSpaceMap values) {
  return {std::move(values), WeightProvenance::custom, std::nullopt};
}

double Weight::symmetry_residual() const {
  const int d = dim();
  double worst = 0.0;
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const double sigma = adjoint_sign(m, n, d);
      worst = std::max(worst, std::abs(std::conj(values_(m, n)) - sigma * values_.at(-m, -n)));
    }
  }
  return worst;
}

ClassicalSymbol ClassicalSymbol::general(PhaseSpaceMap values) { return {std::move(values), SymbolShape::general}; }

ClassicalSymbol ClassicalSymbol::momentum(const std::vector<Complex>& g) {
  const int d = static_cast<int>(g.size());
  PhaseSpaceMap f(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) f(m, n) = g[m];
  return {std::move(f), SymbolShape::momentum_only};
}

ClassicalSymbol ClassicalSymbol::position(const std::vector<Complex>& h) {
  const int d = static_cast<int>(h.size());
  PhaseSpaceMap f(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) f(m, n) = h[n];
  return {std::move(f), SymbolShape::position_only};
}

ClassicalSymbol ClassicalSymbol::separable(const std::vector<Complex>& g, const std::vector<Complex>& h) {
  require_same_dim(static_cast<int>(g.size()), static_cast<int>(h.size()), "separable symbol");
  const int d = static_cast<int>(g.size());
  PhaseSpaceMap f(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) f(m, n) = g[m] * h[n];
  return {std::move(f), SymbolShape::separable};
}

ClassicalSymbol ClassicalSymbol::with_shape(PhaseSpaceMap values, SymbolShape shape, double tol) {
  const int d = values.dim();
  double scale = 1.0;
  for (const auto& z : values.data()) scale = std::max(scale, std::abs(z));
  const double bound = tol * scale;
  auto fail = [](const char* what) { throw InvalidArgument(std::string("symbol is not ") + what); };
  switch (shape) {
    case SymbolShape::general:
      break;
    case SymbolShape::momentum_only:
      for (int m = 0; m < d; ++m)
        for (int n = 1; n < d; ++n)
          if (std::abs(values(m, n) - values(m, 0)) > bound) fail("momentum-only");
      break;
    case SymbolShape::position_only:
      for (int m = 1; m < d; ++m)
        for (int n = 0; n < d; ++n)
          if (std::abs(values(m, n) - values(0, n)) > bound) fail("position-only");
      break;
    case SymbolShape::separable: {
      // rank one: every 2x2 minor through the largest entry vanishes
      int pm = 0, pn = 0;
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
          if (std::abs(values(m, n)) > std::abs(values(pm, pn))) pm = m, pn = n;
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n)
          if (std::abs(values(m, n) * values(pm, pn) - values(m, pn) * values(pm, n)) > bound * scale)
            fail("separable");
      break;
    }
  }
  return {std::move(values), shape};
}

OperatorMatrix quantization_operator(const Weight& w) {
  const int d = w.dim();
  const Phases ph(d);
  OperatorMatrix M(d);
#pragma omp parallel for schedule(static)
  for (int k = 0; k < d; ++k) {
    for (int kp = 0; kp < d; ++kp) {
      const auto b = mod(k - kp, d);
      Complex s = 0.0;
      for (int a = 0; a < d; ++a) s += w(a, static_cast<int>(b)) * ph.half(a * (2 * k - b));
      M(k, kp) = s / static_cast<double>(d);
    }
  }
  return M;
}

Weight weight_from_operator(const OperatorMatrix& M) {
  const int d = M.dim();
  const Complex tr = M.trace();
  if (std::abs(tr - 1.0) > kUnitTraceTol) {
    throw InvalidArgument("weight_from_operator: operator trace must be 1, got " + std::to_string(tr.real()));
  }
  const Phases ph(d);
  PhaseSpaceMap w(d);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      // U(m,n) has entries chi(m,n) omega^{mk} at (k, k - n)
      Complex s = 0.0;
      for (int kp = 0; kp < d; ++kp) {
        const auto k = mod(kp + n, d);
        s += std::conj(ph.omega(m * k)) * M(static_cast<int>(k), kp);
      }
      w(m, n) = std::conj(ph.chi(m, n)) * s;
    }
  }
  return Weight::from_values(std::move(w));
}

OperatorMatrix transported(const OperatorMatrix& M, PhasePoint p) {
  const int d = M.dim();
  const Phases ph(d);
  p = p.reduced(d);
  OperatorMatrix out(d);
#pragma omp parallel for schedule(static) if (d >= 64)
  for (int k = 0; k < d; ++k)
    for (int kp = 0; kp < d; ++kp) out(k, kp) = ph.omega(p.m * (k - kp)) * M.at(k - p.n, kp - p.n);
  return out;
}

PhaseSpaceMap symplectic_dft(const PhaseSpaceMap& f, bool conjugate) {
  const int d = f.dim();
  const Phases ph(d);
  const std::int64_t sign = conjugate ? -1 : 1;
  // pass 1: g(m', m) = sum_n' f(m', n') omega^{sign m n'}
  PhaseSpaceMap g(d);
#pragma omp parallel for schedule(static)
  for (int mp = 0; mp < d; ++mp) {
    for (int m = 0; m < d; ++m) {
      Complex s = 0.0;
      for (int np = 0; np < d; ++np) s += f(mp, np) * ph.omega(sign * m * np);
      g(mp, m) = s;
    }
  }
  // pass 2: F(m, n) = (1/d) sum_m' g(m', m) omega^{-sign m' n}
  PhaseSpaceMap out(d);
#pragma omp parallel for schedule(static)
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      Complex s = 0.0;
      for (int mp = 0; mp < d; ++mp) s += g(mp, m) * ph.omega(-sign * mp * n);
      out(m, n) = s / static_cast<double>(d);
    }
  }
  return out;
}

PhaseSpaceMap point_reflection(const PhaseSpaceMap& f) {
  const int d = f.dim();
  PhaseSpaceMap out(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = f.at(-m, -n);
  return out;
}

ClassicalSymbol shift_symbol(const ClassicalSymbol& f, PhasePoint p) {
  const int d = f.dim();
  PhaseSpaceMap out(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = f.values().at(m - p.m, n - p.n);
  return ClassicalSymbol::with_shape(std::move(out), f.shape());
}

OperatorMatrix quantize(const ClassicalSymbol& f, const Weight& w) {
  require_same_dim(f.dim(), w.dim(), "quantize");
  const int d = w.dim();
  const Phases ph(d);
  const auto fbar = symplectic_dft(f.values(), true);
  PhaseSpaceMap wf(d);
  for (int m = 0; m < d; ++m)
    for (int b = 0; b < d; ++b) wf(m, b) = w(m, b) * fbar(m, b);
  OperatorMatrix A(d);
#pragma omp parallel for schedule(static)
  for (int l = 0; l < d; ++l) {
    for (int lp = 0; lp < d; ++lp) {
      const auto b = mod(l - lp, d);
      Complex s = 0.0;
      for (int m = 0; m < d; ++m) s += wf(m, static_cast<int>(b)) * ph.half(m * (2 * l - b));
      A(l, lp) = s / static_cast<double>(d);
    }
  }
  return A;
}

OperatorMatrix quantize_momentum(const std::vector<Complex>& g, const Weight& w) {
  const int d = w.dim();
  require_same_dim(static_cast<int>(g.size()), d, "quantize_momentum");
  const auto ghat = dft(ZdVector(g));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  OperatorMatrix A(d);
  for (int l = 0; l < d; ++l) {
    for (int lp = 0; lp < d; ++lp) {
      const auto b = mod(l - lp, d);
      A(l, lp) = scale * ghat.at(-b) * w(0, static_cast<int>(b));
    }
  }
  return A;
}

OperatorMatrix quantize_position(const std::vector<Complex>& h, const Weight& w) {
  const int d = w.dim();
  require_same_dim(static_cast<int>(h.size()), d, "quantize_position");
  const Phases ph(d);
  const auto hhat = dft(ZdVector(h));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  OperatorMatrix A(d);
  for (int l = 0; l < d; ++l) {
    Complex s = 0.0;
    for (int m = 0; m < d; ++m) s += hhat[m] * w(m, 0) * ph.omega(static_cast<std::int64_t>(m) * l);
    A(l, l) = scale * s;
  }
  return A;
}

double covariance_check(const ClassicalSymbol& f, const Weight& w, PhasePoint shift) {
  const auto lhs = transported(quantize(f, w), shift);
  const auto rhs = quantize(shift_symbol(f, shift), w);
  return max_abs_diff(lhs, rhs);
}

double min_hermitian_eigenvalue(const OperatorMatrix& A) {
  const int d = A.dim();
  Eigen::MatrixXcd h(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) h(r, c) = 0.5 * (A(r, c) + std::conj(A(c, r)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ToleranceFailure("eigenvalue solver did not converge");
  return solver.eigenvalues().minCoeff();
}

PositivityReport positivity_report(const ClassicalSymbol& f, const Weight& w) {
  const auto A = quantize(f, w);
  PositivityReport r;
  r.min_eigenvalue = min_hermitian_eigenvalue(A);
  r.trace = A.trace().real();
  r.hermiticity_residual = A.hermiticity_residual();
  r.positive_semidefinite = r.min_eigenvalue >= -kDefaultTolerance;
  r.is_density = r.positive_semidefinite && r.hermiticity_residual <= kDefaultTolerance &&
                 std::abs(r.trace - 1.0) <= kDefaultTolerance;
  return r;
}

}  // namespace torusq
