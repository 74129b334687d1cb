#pragma once

#include "torusq/distributions.hpp"

/// Serial, definition-level implementations used as test oracles and benchmark
/// baselines. Every routine builds the defining sum literally (explicit
/// coherent states, displacement matrices, matrix products) and is O(d^4) or worse.
namespace torusq::reference {

/// Phi(p) = <U(p) fiducial | phi> from explicit coherent-state vectors.
PhaseSpaceMap gabor_transform(const ZdVector& phi, const ZdVector& fiducial);

/// (1/d) sum_p |psi_p><psi_p|
OperatorMatrix frame_operator(const ZdVector& fiducial);

/// (1/d) sum_q w(q) U(q) with dense displacement matrices.
OperatorMatrix quantization_operator(const Weight& w);

/// Tr[U(q)^dag M] by dense products.
PhaseSpaceMap weight_values(const OperatorMatrix& M);

/// (1/d) sum_p f(p) U(p) M^w U(p)^dag with dense products.
OperatorMatrix quantize(const ClassicalSymbol& f, const Weight& w);

/// Quadruple-sum symplectic transform.
PhaseSpaceMap symplectic_dft(const PhaseSpaceMap& f, bool conjugate = false);

/// (1/d) <psi| U(p) P U(p)^dag |psi>, complex before realization.
PhaseSpaceMap wigner(const ZdVector& psi);

/// Tr[A U(p) M^w U(p)^dag] by dense products.
PhaseSpaceMap portrait(const OperatorMatrix& A, const Weight& w);

/// (1/d) Tr[M^w(p) M^w] by dense products.
PhaseSpaceMap overlap_distribution(const Weight& w);

}  // namespace torusq::reference
