#include "torusq/weyl.hpp"

#include <cmath>

namespace torusq {

GroupElement::GroupElement(double s, std::int64_t m, std::int64_t n, int d)
    : s_(s), m_(0), n_(0), d_(d) {
  require_dim(d);
  m_ = static_cast<int>(mod(m, d));
  n_ = static_cast<int>(mod(n, d));
}

namespace {

// Exponent K (units of pi/d) of the phase in U(q) U(q') = exp(i pi K/d) U(q + q').
std::int64_t composition_units(const Phases& ph, PhasePoint q, PhasePoint qp) {
  const int d = ph.dim();
  q = q.reduced(d);
  qp = qp.reduced(d);
  const PhasePoint sum = (q + qp).reduced(d);
  const std::int64_t k = ph.half_units(-q.m * q.n) + ph.half_units(-qp.m * qp.n) -
                         2 * mod(qp.m * q.n, d) - ph.half_units(-sum.m * sum.n);
  return mod(k, 2 * d);
}

}  // namespace

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  require_same_dim(a.dim(), b.dim(), "group_mul");
  const int d = a.dim();
  const Phases ph(d);
  const std::int64_t x = static_cast<std::int64_t>(a.m()) * b.n() - static_cast<std::int64_t>(b.m()) * a.n();
  const std::int64_t k = composition_units(ph, a.point(), b.point());
  // k and x agree mod d; a residual of d is a half-period of the central phase.
  const std::int64_t excess = mod(k - x, 2 * d);
  const double central = 0.5 * static_cast<double>(x) + (excess == d ? 0.5 * d : 0.0);
  return {a.s() + b.s() + central, a.m() + b.m(), a.n() + b.n(), d};
}

GroupElement group_inv(const GroupElement& a) {
  // (-s, -m, -n) up to the central term picked up by the reduced labels
  const GroupElement label_inverse(0.0, -a.m(), -a.n(), a.dim());
  const double central = std::remainder(
      group_mul(GroupElement(0.0, a.m(), a.n(), a.dim()), label_inverse).s(), static_cast<double>(a.dim()));
  return {-a.s() - central, -a.m(), -a.n(), a.dim()};
}

bool same_element(const GroupElement& a, const GroupElement& b, double tol) {
  if (a.dim() != b.dim() || a.m() != b.m() || a.n() != b.n()) return false;
  return std::abs(std::remainder(a.s() - b.s(), static_cast<double>(a.dim()))) <= tol;
}

ZdVector displacement_apply(std::int64_t m, std::int64_t n, const ZdVector& psi) {
  const int d = psi.dim();
  const Phases ph(d);
  m = mod(m, d);
  n = mod(n, d);
  const Complex chi = ph.chi(m, n);
  auto out = ZdVector::zeros(d);
  for (int l = 0; l < d; ++l) out[l] = chi * ph.omega(m * l) * psi.at(l - n);
  return out;
}

ZdVector rep_V(const GroupElement& g, const ZdVector& psi) {
  require_same_dim(g.dim(), psi.dim(), "rep_V");
  const Complex central = std::polar(1.0, 2.0 * std::numbers::pi * g.s() / g.dim());
  return displacement_apply(g.m(), g.n(), psi).scaled(central);
}

OperatorMatrix rep_V_matrix(const GroupElement& g) {
  const Complex central = std::polar(1.0, 2.0 * std::numbers::pi * g.s() / g.dim());
  return central * displacement_matrix(g.m(), g.n(), g.dim());
}

OperatorMatrix displacement_matrix(std::int64_t m, std::int64_t n, int d, BasisKind basis) {
  const Phases ph(d);
  m = mod(m, d);
  n = mod(n, d);
  const Complex chi = ph.chi(m, n);
  OperatorMatrix u(d);
  if (basis == BasisKind::kronecker) {
    for (int kp = 0; kp < d; ++kp) {
      const int k = static_cast<int>(mod(kp + n, d));
      u(k, kp) = chi * ph.omega(m * k);
    }
  } else {
    for (int kp = 0; kp < d; ++kp) {
      const int k = static_cast<int>(mod(kp + m, d));
      u(k, kp) = std::conj(chi) * ph.omega(-static_cast<std::int64_t>(k) * n);
    }
  }
  return u;
}

Complex trace_U(std::int64_t m, std::int64_t n, int d) { return displacement_matrix(m, n, d).trace(); }

Composition compose_check(PhasePoint q, PhasePoint qp, int d) {
  const Phases ph(d);
  return {ph.half_turns(composition_units(ph, q, qp)), (q + qp).reduced(d)};
}

Complex conjugation_phase(PhasePoint q, PhasePoint qp, int d) {
  const Phases ph(d);
  return ph.omega(-symplectic(q.reduced(d), qp.reduced(d)));
}

int adjoint_sign(std::int64_t m, std::int64_t n, int d) {
  // U(q) U(-q) = c * 1, hence U(-q) = c * U(q)^dag with c = +-1.
  const Phases ph(d);
  const std::int64_t k = composition_units(ph, {m, n}, {-m, -n});
  return k == 0 ? 1 : -1;
}

OperatorMatrix parity_matrix(int d) {
  OperatorMatrix p(d);
  for (int l = 0; l < d; ++l) p(l, static_cast<int>(mod(-l, d))) = 1.0;
  return p;
}

}  // namespace torusq
