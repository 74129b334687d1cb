#pragma once

#include <span>
#include <vector>

#include "torusq/core.hpp"
#include "torusq/hilbert.hpp"

namespace torusq {

namespace detail {

/// Dense row-major d x d storage shared by operators and phase-space maps.
template <typename T>
class SquareArray {
 public:
  SquareArray() = default;
  explicit SquareArray(int d) : d_(d), data_(static_cast<std::size_t>(d) * d) { require_dim(d); }
  SquareArray(int d, std::vector<T> data) : d_(d), data_(std::move(data)) {
    require_dim(d);
    if (data_.size() != static_cast<std::size_t>(d) * d) {
      throw InvalidArgument("square array: expected " + std::to_string(d * d) + " entries, got " +
                            std::to_string(data_.size()));
    }
  }

  int dim() const { return d_; }

  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }

  /// Periodic access in both indices.
  const T& at(std::int64_t r, std::int64_t c) const {
    return data_[index(static_cast<int>(mod(r, d_)), static_cast<int>(mod(c, d_)))];
  }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(d_) + static_cast<std::size_t>(c);
  }

  int d_ = 0;
  std::vector<T> data_;
};

}  // namespace detail

/// d x d complex operator in the Kronecker (position) basis: entry (row, col)
/// maps input label col to output label row.
class OperatorMatrix : public detail::SquareArray<Complex> {
 public:
  using SquareArray::SquareArray;

  static OperatorMatrix identity(int d);
  static OperatorMatrix zeros(int d) { return OperatorMatrix(d); }
  /// |a><b|
  static OperatorMatrix outer(const ZdVector& a, const ZdVector& b);

  OperatorMatrix adjoint() const;
  Complex trace() const;
  ZdVector apply(const ZdVector& v) const;

  /// max |A - A^dag|
  double hermiticity_residual() const;
  bool is_hermitian(double tol = kDefaultTolerance) const { return hermiticity_residual() <= tol; }
  /// max |A A^dag - I|
  double unitarity_residual() const;
};

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix operator*(Complex s, const OperatorMatrix& a);

/// Tr[a b] without forming the product.
Complex trace_of_product(const OperatorMatrix& a, const OperatorMatrix& b);

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

/// Complex function on Gamma_d = Z_d x Z_d, indexed (m, n): m momentum, n position.
class PhaseSpaceMap : public detail::SquareArray<Complex> {
 public:
  using SquareArray::SquareArray;

  static PhaseSpaceMap constant(int d, Complex value);
  static PhaseSpaceMap delta(int d, int m, int n, Complex value = 1.0);

  /// Sum over all phase points.
  Complex total() const;
};

double max_abs_diff(const PhaseSpaceMap& a, const PhaseSpaceMap& b);

/// Real function on Gamma_d (Husimi, Wigner, overlap distributions).
class RealPhaseSpaceMap : public detail::SquareArray<double> {
 public:
  using SquareArray::SquareArray;

  double total() const;
  double min() const;
  double max() const;
  /// Sum over n, indexed by m.
  std::vector<double> row_sums() const;
  /// Sum over m, indexed by n.
  std::vector<double> column_sums() const;
};

double max_abs_diff(const RealPhaseSpaceMap& a, const RealPhaseSpaceMap& b);

/// Real part of a map whose imaginary part is below `tol`; throws ToleranceFailure otherwise.
RealPhaseSpaceMap realize(const PhaseSpaceMap& map, double tol = 1e-12);

/// Largest |Im| over all entries.
double max_imaginary(const PhaseSpaceMap& map);

}  // namespace torusq
