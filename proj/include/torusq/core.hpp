#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusq {

using Complex = std::complex<double>;

/// Default absolute tolerance for entrywise comparisons of vectors and matrices.
inline constexpr double kDefaultTolerance = 1e-10;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different Z_d.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside the documented range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this input (e.g. parity Wigner at even d).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A numerical guard tripped (normalization, realness, residual).
class ToleranceFailure : public Error {
 public:
  using Error::Error;
};

/// Canonical representative of a modulo d, in [0, d).
constexpr std::int64_t mod(std::int64_t a, std::int64_t d) {
  const std::int64_t r = a % d;
  return r < 0 ? r + d : r;
}

inline void require_dim(int d) {
  if (d < 1) throw InvalidArgument("dimension must be positive, got " + std::to_string(d));
}

inline void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

/// Root-of-unity table for Z_d.
///
/// Every phase in the library is an integer power of exp(i pi / d), looked up
/// from reduced integer exponents so that large arguments never reach
/// std::exp. The half-phase `half(x)` stands for omega^{x/2}: for even d it is
/// exp(i pi x / d) with x an ordinary integer built from canonical
/// representatives; for odd d, x/2 is the product of x with the inverse of 2
/// in Z_d, which makes the Weyl operators genuinely d-periodic in both labels.
class Phases {
 public:
  explicit Phases(int d) : d_(d), table_(2 * static_cast<std::size_t>(d)) {
    require_dim(d);
    for (int k = 0; k < 2 * d; ++k) {
      table_[k] = std::polar(1.0, std::numbers::pi * static_cast<double>(k) / d);
    }
  }

  int dim() const { return d_; }

  /// exp(i pi k / d)
  Complex half_turns(std::int64_t k) const { return table_[mod(k, 2 * d_)]; }

  /// omega^j with omega = exp(2 pi i / d)
  Complex omega(std::int64_t j) const { return table_[2 * mod(j, d_)]; }

  /// Exponent k in [0, 2d) with half(x) = exp(i pi k / d).
  std::int64_t half_units(std::int64_t x) const {
    if (d_ % 2 == 0) return mod(x, 2 * d_);
    const std::int64_t inv2 = (d_ + 1) / 2;
    return 2 * mod(mod(x, d_) * inv2, d_);
  }

  Complex half(std::int64_t x) const { return table_[half_units(x)]; }

  /// Phase of U(m,n) relative to E_m T_n, i.e. omega^{-mn/2}; m, n canonical.
  Complex chi(std::int64_t m, std::int64_t n) const { return half(-m * n); }

 private:
  int d_;
  std::vector<Complex> table_;
};

}  // namespace torusq
