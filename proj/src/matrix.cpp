#include "torusq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace torusq {

OperatorMatrix OperatorMatrix::identity(int d) {
  OperatorMatrix m(d);
  for (int k = 0; k < d; ++k) m(k, k) = 1.0;
  return m;
}

OperatorMatrix OperatorMatrix::outer(const ZdVector& a, const ZdVector& b) {
  require_same_dim(a.dim(), b.dim(), "outer");
  const int d = a.dim();
  OperatorMatrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  const int d = dim();
  OperatorMatrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Complex OperatorMatrix::trace() const {
  Complex s = 0.0;
  for (int k = 0; k < dim(); ++k) s += (*this)(k, k);
  return s;
}

ZdVector OperatorMatrix::apply(const ZdVector& v) const {
  require_same_dim(dim(), v.dim(), "apply");
  const int d = dim();
  auto out = ZdVector::zeros(d);
  for (int r = 0; r < d; ++r) {
    Complex s = 0.0;
    for (int c = 0; c < d; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double OperatorMatrix::hermiticity_residual() const {
  double m = 0.0;
  for (int r = 0; r < dim(); ++r)
    for (int c = r; c < dim(); ++c) m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

double OperatorMatrix::unitarity_residual() const {
  return max_abs_diff((*this) * adjoint(), identity(dim()));
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix product");
  const int d = a.dim();
  OperatorMatrix out(d);
#pragma omp parallel for schedule(static) if (d >= 64)
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) {
      const Complex ark = a(r, k);
      if (ark == Complex{}) continue;
      for (int c = 0; c < d; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matrix sum");
  OperatorMatrix out = a;
  auto dst = out.data();
  auto src = b.data();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

OperatorMatrix operator*(Complex s, const OperatorMatrix& a) {
  OperatorMatrix out = a;
  for (auto& z : out.data()) z *= s;
  return out;
}

Complex trace_of_product(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "trace_of_product");
  Complex s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int k = 0; k < a.dim(); ++k) s += a(r, k) * b(k, r);
  return s;
}

namespace {

template <typename T>
double max_diff(std::span<const T> a, std::span<const T> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, static_cast<double>(std::abs(a[i] - b[i])));
  return m;
}

}  // namespace

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  return max_diff(a.data(), b.data());
}

PhaseSpaceMap PhaseSpaceMap::constant(int d, Complex value) {
  PhaseSpaceMap f(d);
  for (auto& z : f.data()) z = value;
  return f;
}

PhaseSpaceMap PhaseSpaceMap::delta(int d, int m, int n, Complex value) {
  PhaseSpaceMap f(d);
  f(static_cast<int>(mod(m, d)), static_cast<int>(mod(n, d))) = value;
  return f;
}

Complex PhaseSpaceMap::total() const {
  Complex s = 0.0;
  for (const auto& z : data()) s += z;
  return s;
}

double max_abs_diff(const PhaseSpaceMap& a, const PhaseSpaceMap& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  return max_diff(a.data(), b.data());
}

double RealPhaseSpaceMap::total() const {
  double s = 0.0;
  for (double v : data()) s += v;
  return s;
}

double RealPhaseSpaceMap::min() const { return *std::min_element(data().begin(), data().end()); }

double RealPhaseSpaceMap::max() const { return *std::max_element(data().begin(), data().end()); }

std::vector<double> RealPhaseSpaceMap::row_sums() const {
  std::vector<double> s(static_cast<std::size_t>(dim()), 0.0);
  for (int m = 0; m < dim(); ++m)
    for (int n = 0; n < dim(); ++n) s[m] += (*this)(m, n);
  return s;
}

std::vector<double> RealPhaseSpaceMap::column_sums() const {
  std::vector<double> s(static_cast<std::size_t>(dim()), 0.0);
  for (int m = 0; m < dim(); ++m)
    for (int n = 0; n < dim(); ++n) s[n] += (*this)(m, n);
  return s;
}

double max_abs_diff(const RealPhaseSpaceMap& a, const RealPhaseSpaceMap& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  return max_diff(a.data(), b.data());
}

double max_imaginary(const PhaseSpaceMap& map) {
  double m = 0.0;
  for (const auto& z : map.data()) m = std::max(m, std::abs(z.imag()));
  return m;
}

RealPhaseSpaceMap realize(const PhaseSpaceMap& map, double tol) {
  const double im = max_imaginary(map);
  if (im > tol) {
    throw ToleranceFailure("phase-space map is not real: max |Im| = " + std::to_string(im));
  }
  RealPhaseSpaceMap out(map.dim());
  auto src = map.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i].real();
  return out;
}

}  // namespace torusq
