#include "torusq/reference.hpp"

namespace torusq::reference {

namespace {

OperatorMatrix U(std::int64_t m, std::int64_t n, int d) { return displacement_matrix(m, n, d); }

OperatorMatrix conjugate_by(const OperatorMatrix& M, std::int64_t m, std::int64_t n) {
  const auto u = U(m, n, M.dim());
  return u * M * u.adjoint();
}

}  // namespace

PhaseSpaceMap gabor_transform(const ZdVector& phi, const ZdVector& fiducial) {
  const int d = phi.dim();
  PhaseSpaceMap out(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = inner(coherent_state(fiducial, {m, n}), phi);
  return out;
}

OperatorMatrix frame_operator(const ZdVector& fiducial) {
  const int d = fiducial.dim();
  OperatorMatrix S(d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const auto cs = coherent_state(fiducial, {m, n});
      S = S + OperatorMatrix::outer(cs, cs);
    }
  }
  return (1.0 / d) * S;
}

OperatorMatrix quantization_operator(const Weight& w) {
  const int d = w.dim();
  OperatorMatrix M(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) M = M + w(m, n) * U(m, n, d);
  return (1.0 / d) * M;
}

PhaseSpaceMap weight_values(const OperatorMatrix& M) {
  const int d = M.dim();
  PhaseSpaceMap w(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) w(m, n) = (U(m, n, d).adjoint() * M).trace();
  return w;
}

OperatorMatrix quantize(const ClassicalSymbol& f, const Weight& w) {
  const int d = w.dim();
  const auto M = reference::quantization_operator(w);
  OperatorMatrix A(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) A = A + f.values()(m, n) * conjugate_by(M, m, n);
  return (1.0 / d) * A;
}

PhaseSpaceMap symplectic_dft(const PhaseSpaceMap& f, bool conjugate) {
  const int d = f.dim();
  const Phases ph(d);
  const std::int64_t sign = conjugate ? -1 : 1;
  PhaseSpaceMap out(d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      Complex s = 0.0;
      for (int mp = 0; mp < d; ++mp)
        for (int np = 0; np < d; ++np)
          s += f(mp, np) * ph.omega(-sign * (static_cast<std::int64_t>(mp) * n - static_cast<std::int64_t>(m) * np));
      out(m, n) = s / static_cast<double>(d);
    }
  }
  return out;
}

PhaseSpaceMap wigner(const ZdVector& psi) {
  const int d = psi.dim();
  const auto P = parity_matrix(d);
  PhaseSpaceMap out(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = inner(psi, conjugate_by(P, m, n).apply(psi)) / static_cast<double>(d);
  return out;
}

PhaseSpaceMap portrait(const OperatorMatrix& A, const Weight& w) {
  const int d = A.dim();
  const auto M = reference::quantization_operator(w);
  PhaseSpaceMap out(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = (A * conjugate_by(M, m, n)).trace();
  return out;
}

PhaseSpaceMap overlap_distribution(const Weight& w) {
  const int d = w.dim();
  const auto M = reference::quantization_operator(w);
  PhaseSpaceMap out(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m, n) = (conjugate_by(M, m, n) * M).trace() / static_cast<double>(d);
  return out;
}

}  // namespace torusq::reference
