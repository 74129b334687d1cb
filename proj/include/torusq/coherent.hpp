#pragma once

#include <optional>
#include <string>
#include <variant>

#include "torusq/hilbert.hpp"
#include "torusq/matrix.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

namespace fiducial {

struct Constant {};
struct Kronecker {
  int k0 = 0;
};
struct PlaneWave {
  int k0 = 0;
};
/// Periodized Gaussian of width parameter kappa > 0.
struct Gaussian {
  double kappa = 1.0;
};
/// Dirichlet kernel with 2j + 1 <= d frequencies.
struct Dirichlet {
  int j = 0;
};
struct VonMises {
  double lambda = 0.0;
};
/// User-supplied vector; renormalized with a warning if not unit norm.
struct Custom {
  ZdVector values;
};

}  // namespace fiducial

using FiducialSpec = std::variant<fiducial::Constant, fiducial::Kronecker, fiducial::PlaneWave,
                                  fiducial::Gaussian, fiducial::Dirichlet, fiducial::VonMises,
                                  fiducial::Custom>;

/// Short human-readable form, e.g. "von_mises:400".
std::string describe(const FiducialSpec& spec);

/// Unit-norm vector for `spec` on Z_d. Throws InvalidArgument for out-of-range
/// parameters and ToleranceFailure if renormalization does not reach unit norm.
ZdVector realize_fiducial(const FiducialSpec& spec, int d);

/// Third Jacobi theta function theta_3(x, i s_im) = sum_n exp(2 pi i n x) exp(-pi s_im n^2).
Complex theta_3(double x, double s_im);
/// Same series for complex argument z; summed around the dominant term.
Complex theta_3(Complex z, double s_im);

/// psi_(m,n) = U(m,n) phi.
ZdVector coherent_state(const ZdVector& phi, PhasePoint p);

/// Phi(m,n) = <psi_(m,n)|phi>.
PhaseSpaceMap gabor_transform(const ZdVector& phi, const ZdVector& fiducial);

/// phi(l) = (1/d) sum_{m,n} Phi(m,n) psi_(m,n)(l).
ZdVector gabor_inverse(const PhaseSpaceMap& coefficients, const ZdVector& fiducial);

/// | ||phi||^2 - (1/d) sum |Phi|^2 |
double isometry_residual(const ZdVector& phi, const ZdVector& fiducial);

/// max | (1/d) sum_p |psi_p><psi_p| - 1 |
double resolution_of_identity_residual(const ZdVector& fiducial);

/// Psi(dm, dn) = sum_l omega^{-dm l} conj(psi(l - dn)) psi(l), the overlap
/// function entering the factored reproducing kernel.
PhaseSpaceMap ambiguity_function(const ZdVector& psi);

/// K_psi(p, p') = <psi_p|psi_p'> from the coherent states themselves.
Complex reproducing_kernel(const ZdVector& psi, PhasePoint p, PhasePoint pp);

/// Factored kernel A(m,m',n,n') Psi(m-m', n-n') with
/// A = omega^{(m(n-n') - (m-m')n')/2}.
Complex reproducing_kernel_factored(const PhaseSpaceMap& ambiguity, PhasePoint p, PhasePoint pp);

/// Closed form of K for the catalog fiducials that have one (constant,
/// Kronecker, plane wave, Gaussian, and Dirichlet with 2j + 1 = d).
std::optional<Complex> closed_form_kernel(const FiducialSpec& spec, int d, PhasePoint p,
                                          PhasePoint pp);

/// max_p | Phi(p) - (1/d) sum_p' K(p,p') Phi(p') |, Phi the Gabor transform of phi.
double reproducing_property_check(const ZdVector& fiducial, const ZdVector& phi);

}  // namespace torusq
