#include "torusq/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace torusq {

ZdVector::ZdVector(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("ZdVector needs at least one entry");
}

ZdVector ZdVector::zeros(int d) {
  require_dim(d);
  return ZdVector(std::vector<Complex>(static_cast<std::size_t>(d)));
}

ZdVector ZdVector::kronecker(int d, int k) {
  require_dim(d);
  if (k < 0 || k >= d) {
    throw InvalidArgument("Kronecker index " + std::to_string(k) + " outside [0, " +
                          std::to_string(d) + ")");
  }
  auto v = zeros(d);
  v[k] = 1.0;
  return v;
}

double ZdVector::norm_squared() const {
  double s = 0.0;
  for (const auto& z : values_) s += std::norm(z);
  return s;
}

double ZdVector::norm() const { return std::sqrt(norm_squared()); }

ZdVector ZdVector::scaled(Complex factor) const {
  auto out = values_;
  for (auto& z : out) z *= factor;
  return ZdVector(std::move(out));
}

ZdVector ZdVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

Complex inner(const ZdVector& a, const ZdVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner");
  Complex s = 0.0;
  for (int l = 0; l < a.dim(); ++l) s += std::conj(a[l]) * b[l];
  return s;
}

ZdVector fourier_basis(int d, int k) {
  require_dim(d);
  if (k < 0 || k >= d) {
    throw InvalidArgument("Fourier index " + std::to_string(k) + " outside [0, " +
                          std::to_string(d) + ")");
  }
  const Phases ph(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> v(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) v[l] = scale * ph.omega(static_cast<std::int64_t>(k) * l);
  return ZdVector(std::move(v));
}

namespace {

ZdVector dft_with_sign(const ZdVector& in, int sign) {
  const int d = in.dim();
  const Phases ph(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    Complex s = 0.0;
    for (int l = 0; l < d; ++l) s += ph.omega(sign * static_cast<std::int64_t>(k) * l) * in[l];
    out[k] = scale * s;
  }
  return ZdVector(std::move(out));
}

}  // namespace

ZdVector dft(const ZdVector& phi) { return dft_with_sign(phi, -1); }

ZdVector idft(const ZdVector& phi_hat) { return dft_with_sign(phi_hat, +1); }

ZdVector translate(const ZdVector& phi, std::int64_t n0) {
  const int d = phi.dim();
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) out[l] = phi.at(l - n0);
  return ZdVector(std::move(out));
}

ZdVector modulate(const ZdVector& phi, std::int64_t k0) {
  const int d = phi.dim();
  const Phases ph(d);
  const std::int64_t k = mod(k0, d);
  std::vector<Complex> out(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) out[l] = ph.omega(k * l) * phi[l];
  return ZdVector(std::move(out));
}

double max_abs_diff(const ZdVector& a, const ZdVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double m = 0.0;
  for (int l = 0; l < a.dim(); ++l) m = std::max(m, std::abs(a[l] - b[l]));
  return m;
}

}  // namespace torusq
