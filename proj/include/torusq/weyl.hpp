#pragma once

#include "torusq/core.hpp"
#include "torusq/hilbert.hpp"
#include "torusq/matrix.hpp"

namespace torusq {

/// Point (m, n) of Gamma_d = H(Z_d)/C. Functions taking a PhasePoint reduce it mod d.
struct PhasePoint {
  std::int64_t m = 0;
  std::int64_t n = 0;

  PhasePoint reduced(int d) const { return {mod(m, d), mod(n, d)}; }
  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

inline PhasePoint operator+(PhasePoint a, PhasePoint b) { return {a.m + b.m, a.n + b.n}; }
inline PhasePoint operator-(PhasePoint a, PhasePoint b) { return {a.m - b.m, a.n - b.n}; }
inline PhasePoint operator-(PhasePoint a) { return {-a.m, -a.n}; }

/// Element (s, m, n) of the discrete Weyl-Heisenberg group H(Z_d).
///
/// m and n are stored as canonical representatives. The central parameter s
/// only enters through exp(2 pi i s / d), so two elements whose s differ by a
/// multiple of d act identically; see `same_element`.
class GroupElement {
 public:
  GroupElement(double s, std::int64_t m, std::int64_t n, int d);

  static GroupElement identity(int d) { return {0.0, 0, 0, d}; }

  double s() const { return s_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return d_; }
  PhasePoint point() const { return {m_, n_}; }

 private:
  double s_;
  int m_;
  int n_;
  int d_;
};

/// Group law. The central term is (m n' - m' n)/2 and, when the Weyl phase
/// convention requires it, an extra d/2 so that V(a) V(b) = V(a b) exactly.
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);

/// Equal labels and central parameters congruent modulo d.
bool same_element(const GroupElement& a, const GroupElement& b, double tol = 1e-12);

/// (V(s,m,n) psi)(l) = exp(2 pi i s/d) (U(m,n) psi)(l).
ZdVector rep_V(const GroupElement& g, const ZdVector& psi);
OperatorMatrix rep_V_matrix(const GroupElement& g);

/// (U(m,n) psi)(l) = omega^{-mn/2} omega^{ml} psi(l - n).
ZdVector displacement_apply(std::int64_t m, std::int64_t n, const ZdVector& psi);
inline ZdVector displacement_apply(PhasePoint p, const ZdVector& psi) {
  return displacement_apply(p.m, p.n, psi);
}

/// Matrix of U(m,n). Kronecker basis: entry (k, k') = omega^{-mn/2} omega^{mk} [k = k' + n].
/// Fourier basis: entry (k, k') = <e_k|U e_k'> = omega^{mn/2} omega^{-kn} [k = k' + m].
OperatorMatrix displacement_matrix(std::int64_t m, std::int64_t n, int d,
                                   BasisKind basis = BasisKind::kronecker);

/// Tr U(m,n), evaluated from the matrix diagonal.
Complex trace_U(std::int64_t m, std::int64_t n, int d);

struct Composition {
  Complex phase;
  PhasePoint point;  ///< canonical (m + m', n + n')
};

/// U(q) U(q') = phase * U(q + q'), with the phase exact for the reduced point.
/// Without wrap-around (and at even d) it is exp(i pi (m n' - n m') / d).
Composition compose_check(PhasePoint q, PhasePoint qp, int d);

/// U(q') U(q) U(q')^dag = omega^{-(m n' - m' n)} U(q).
Complex conjugation_phase(PhasePoint q, PhasePoint qp, int d);

/// Sign s with U(-m mod d, -n mod d) = s * U(m,n)^dag. Always +1 for odd d.
int adjoint_sign(std::int64_t m, std::int64_t n, int d);

/// (P psi)(l) = psi(-l).
OperatorMatrix parity_matrix(int d);

/// Symplectic form m n' - n m' of two phase points (unreduced).
inline std::int64_t symplectic(PhasePoint a, PhasePoint b) { return a.m * b.n - a.n * b.m; }

}  // namespace torusq
