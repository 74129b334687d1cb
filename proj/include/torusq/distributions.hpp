#pragma once

#include "torusq/quantization.hpp"

namespace torusq {

/// H(m,n) = (1/d) |<phi_(m,n)|psi>|^2. Throws InvalidArgument unless phi has unit norm.
RealPhaseSpaceMap husimi(const ZdVector& psi, const ZdVector& phi);

/// W(m,n) = (1/d) sum_l omega^{2ml} conj(psi(n+l)) psi(n-l), equal to
/// (1/d) <psi|U(m,n) P U(m,n)^dag|psi>. Odd d only (PreconditionViolation otherwise).
RealPhaseSpaceMap wigner(const ZdVector& psi);

/// Same distribution from the half-argument form (1/d) sum_k omega^{mk}
/// conj(psi(n + k/2)) psi(n - k/2), with k/2 taken in Z_d.
RealPhaseSpaceMap wigner_half_argument(const ZdVector& psi);

/// A_check(p) = Tr[A U(p) M^w U(p)^dag], evaluated as F_s[w t] with t(q) = Tr[A U(q)].
PhaseSpaceMap portrait(const OperatorMatrix& A, const Weight& w);

/// D(p) = (1/d) Tr[M^w(p) M^w] in its Fourier form
/// (1/d^2) sum_q w(q) sigma(q) w(-q) omega^{p_m q_n - p_n q_m};
/// the product reduces to |w(q)|^2 for symmetric weights. Sums to 1.
PhaseSpaceMap overlap_kernel(const Weight& w);

/// Real overlap distribution; throws ToleranceFailure if the kernel is not real.
RealPhaseSpaceMap overlap_distribution(const Weight& w);

/// f_check(p) = sum_p' f(p - p') D(p'), the portrait of A_f^w.
PhaseSpaceMap portrait_of_symbol(const ClassicalSymbol& f, const Weight& w);

}  // namespace torusq
