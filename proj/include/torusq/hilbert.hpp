#pragma once

#include <span>
#include <vector>

#include "torusq/core.hpp"

namespace torusq {

/// Element of L^2(Z_d): a d-periodic complex sequence.
class ZdVector {
 public:
  ZdVector() = default;
  explicit ZdVector(std::vector<Complex> values);

  static ZdVector zeros(int d);
  static ZdVector kronecker(int d, int k);

  int dim() const { return static_cast<int>(values_.size()); }

  const Complex& operator[](int l) const { return values_[static_cast<std::size_t>(l)]; }
  Complex& operator[](int l) { return values_[static_cast<std::size_t>(l)]; }

  /// Periodic access: at(l + d) == at(l).
  const Complex& at(std::int64_t l) const {
    return values_[static_cast<std::size_t>(mod(l, dim()))];
  }

  std::span<const Complex> values() const { return values_; }

  double norm() const;
  double norm_squared() const;

  ZdVector scaled(Complex factor) const;
  ZdVector normalized() const;

 private:
  std::vector<Complex> values_;
};

enum class BasisKind { fourier, kronecker };

/// Sum_l conj(a(l)) b(l).
Complex inner(const ZdVector& a, const ZdVector& b);

/// e^d_k(l) = exp(2 pi i k l / d) / sqrt(d). Rejects k outside [0, d).
ZdVector fourier_basis(int d, int k);

/// Unitary DFT, kernel exp(-2 pi i k l / d) / sqrt(d).
ZdVector dft(const ZdVector& phi);
ZdVector idft(const ZdVector& phi_hat);

/// (T_n0 phi)(l) = phi(l - n0); n0 is reduced mod d.
ZdVector translate(const ZdVector& phi, std::int64_t n0);
/// (E_k0 phi)(l) = exp(2 pi i k0 l / d) phi(l); k0 is reduced mod d.
ZdVector modulate(const ZdVector& phi, std::int64_t k0);

double max_abs_diff(const ZdVector& a, const ZdVector& b);

}  // namespace torusq
