#pragma once

#include <optional>
#include <vector>

#include "torusq/coherent.hpp"
#include "torusq/matrix.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

enum class WeightProvenance { parity, coherent_state, custom };

/// Weight w on Gamma_d generating M^w = (1/d) sum_q w(q) U(q).
///
/// Construction rejects w(0,0) != 1 (unit trace of M^w).
class Weight {
 public:
  /// w == 1; M^w is the parity operator at odd d.
  static Weight parity(int d);
  /// w(q) = <U(q) phi | phi>, so that M^w = |phi><phi|.
  static Weight coherent_state(const ZdVector& phi);
  static Weight from_values(PhaseSpaceMap values);

  int dim() const { return values_.dim(); }
  const PhaseSpaceMap& values() const { return values_; }
  Complex operator()(int m, int n) const { return values_(m, n); }
  Complex at(std::int64_t m, std::int64_t n) const { return values_.at(m, n); }
  WeightProvenance provenance() const { return provenance_; }
  /// Fiducial of a coherent-state weight.
  const std::optional<ZdVector>& fiducial() const { return fiducial_; }

  /// max_q |conj(w(q)) - sigma(q) w(-q)|, zero exactly when M^w is hermitian.
  /// sigma is the adjoint sign of U and equals 1 at odd d.
  double symmetry_residual() const;
  bool is_symmetric(double tol = kDefaultTolerance) const { return symmetry_residual() <= tol; }

 private:
  Weight(PhaseSpaceMap values, WeightProvenance provenance, std::optional<ZdVector> fiducial);

  PhaseSpaceMap values_;
  WeightProvenance provenance_;
  std::optional<ZdVector> fiducial_;
};

enum class SymbolShape { general, momentum_only, position_only, separable };

/// Classical observable f(m,n) with a validated shape hint.
class ClassicalSymbol {
 public:
  static ClassicalSymbol general(PhaseSpaceMap values);
  /// f(m,n) = g(m)
  static ClassicalSymbol momentum(const std::vector<Complex>& g);
  /// f(m,n) = h(n)
  static ClassicalSymbol position(const std::vector<Complex>& h);
  /// f(m,n) = g(m) h(n)
  static ClassicalSymbol separable(const std::vector<Complex>& g, const std::vector<Complex>& h);
  /// Declared shape; throws InvalidArgument if `values` do not have it.
  static ClassicalSymbol with_shape(PhaseSpaceMap values, SymbolShape shape, double tol = 1e-12);

  int dim() const { return values_.dim(); }
  const PhaseSpaceMap& values() const { return values_; }
  SymbolShape shape() const { return shape_; }

 private:
  ClassicalSymbol(PhaseSpaceMap values, SymbolShape shape) : values_(std::move(values)), shape_(shape) {}

  PhaseSpaceMap values_;
  SymbolShape shape_;
};

/// M^w from its kernel M(k,k') = (1/d) sum_a w(a, k-k') omega^{a(k+k')/2}.
OperatorMatrix quantization_operator(const Weight& w);

/// w(q) = Tr[U(q)^dag M]. Throws InvalidArgument unless Tr M = 1.
Weight weight_from_operator(const OperatorMatrix& M);

/// U(p) M U(p)^dag, evaluated entrywise.
OperatorMatrix transported(const OperatorMatrix& M, PhasePoint p);

/// F_s[f](m,n) = (1/d) sum f(m',n') omega^{-(m'n - mn')}; `conjugate` flips the sign.
PhaseSpaceMap symplectic_dft(const PhaseSpaceMap& f, bool conjugate = false);

/// f(m,n) -> f(-m,-n)
PhaseSpaceMap point_reflection(const PhaseSpaceMap& f);

/// f(q) -> f(q - p)
ClassicalSymbol shift_symbol(const ClassicalSymbol& f, PhasePoint p);

/// A_f^w = (1/d) sum_p f(p) U(p) M^w U(p)^dag through the kernel
/// A(l,l') = (1/d) sum_m w(m,b) conj(F_s)[f](m,b) omega^{m(l+l')/2}, b = l - l'.
OperatorMatrix quantize(const ClassicalSymbol& f, const Weight& w);

/// A_g^w for f(m,n) = g(m): kernel (1/sqrt d) g^(-(l-l')) w(0, l-l').
OperatorMatrix quantize_momentum(const std::vector<Complex>& g, const Weight& w);

/// A_h^w for f(m,n) = h(n): multiplication by (1/sqrt d) sum_m h^(m) w(m,0) omega^{ml}.
OperatorMatrix quantize_position(const std::vector<Complex>& h, const Weight& w);

/// max |U(s) A_f U(s)^dag - A_{f(. - s)}|
double covariance_check(const ClassicalSymbol& f, const Weight& w, PhasePoint shift);

struct PositivityReport {
  bool is_density = false;             ///< PSD and unit trace
  bool positive_semidefinite = false;  ///< min eigenvalue >= -1e-10
  double min_eigenvalue = 0.0;         ///< of (A + A^dag)/2
  double trace = 0.0;                  ///< Re Tr A
  double hermiticity_residual = 0.0;
};

PositivityReport positivity_report(const ClassicalSymbol& f, const Weight& w);

/// Smallest eigenvalue of (A + A^dag)/2.
double min_hermitian_eigenvalue(const OperatorMatrix& A);

}  // namespace torusq
