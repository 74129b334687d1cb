#include "torusq/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

namespace torusq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kNormGuard = 1e-8;

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

ZdVector renormalize_checked(ZdVector v, const std::string& what) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw ToleranceFailure(what + ": fiducial has zero or non-finite norm");
  v = v.scaled(1.0 / n);
  if (std::abs(v.norm() - 1.0) > kNormGuard) {
    throw ToleranceFailure(what + ": renormalized fiducial deviates from unit norm");
  }
  return v;
}

}  // namespace

std::string describe(const FiducialSpec& spec) {
  return std::visit(
      overloaded{
          [](const fiducial::Constant&) { return std::string("constant"); },
          [](const fiducial::Kronecker& k) { return "kronecker:" + std::to_string(k.k0); },
          [](const fiducial::PlaneWave& p) { return "plane_wave:" + std::to_string(p.k0); },
          [](const fiducial::Gaussian& g) { return "gaussian:" + format_param(g.kappa); },
          [](const fiducial::Dirichlet& dk) { return "dirichlet:" + std::to_string(dk.j); },
          [](const fiducial::VonMises& v) { return "von_mises:" + format_param(v.lambda); },
          [](const fiducial::Custom&) { return std::string("custom"); },
      },
      spec);
}

Complex theta_3(double x, double s_im) {
  if (!(s_im > 0.0) || !std::isfinite(s_im)) {
    throw InvalidArgument("theta_3: imaginary part of the modulus must be positive");
  }
  const double frac = x - std::floor(x);
  // Smallest retained term exp(-pi s N^2) stays above 1e-16.
  const auto terms = static_cast<int>(std::ceil(std::sqrt(16.0 * std::log(10.0) / (std::numbers::pi * s_im))));
  double sum = 0.0;
  for (int n = terms; n >= 1; --n) {
    sum += std::cos(2.0 * std::numbers::pi * n * frac) * std::exp(-std::numbers::pi * s_im * n * n);
  }
  return {1.0 + 2.0 * sum, 0.0};
}

Complex theta_3(Complex z, double s_im) {
  if (!(s_im > 0.0) || !std::isfinite(s_im)) {
    throw InvalidArgument("theta_3: imaginary part of the modulus must be positive");
  }
  const double x = z.real() - std::floor(z.real());
  const double y = z.imag();
  // exponent(n) = -pi s n^2 - 2 pi y n, largest at n = -y/s
  auto exponent = [&](double n) { return -std::numbers::pi * (s_im * n * n + 2.0 * y * n); };
  const double centre = std::round(-y / s_im);
  const double peak = std::max(exponent(centre), exponent(-y / s_im));
  if (peak > 700.0) throw ToleranceFailure("theta_3: series terms overflow double precision");
  const double cutoff = peak - 16.0 * std::log(10.0);
  Complex sum = 0.0;
  auto term = [&](double n) {
    return std::polar(std::exp(exponent(n)), 2.0 * std::numbers::pi * n * x);
  };
  sum += term(centre);
  for (double n = centre + 1.0; exponent(n) >= cutoff || n <= -y / s_im; n += 1.0) sum += term(n);
  for (double n = centre - 1.0; exponent(n) >= cutoff || n >= -y / s_im; n -= 1.0) sum += term(n);
  return sum;
}

ZdVector realize_fiducial(const FiducialSpec& spec, int d) {
  require_dim(d);
  const Phases ph(d);
  const double dd = static_cast<double>(d);
  auto make = [d](auto&& value_at) {
    std::vector<Complex> v(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) v[l] = value_at(l);
    return ZdVector(std::move(v));
  };
  auto check_index = [d](int k0, const char* what) {
    if (k0 < 0 || k0 >= d) {
      throw InvalidArgument(std::string(what) + ": index " + std::to_string(k0) + " outside [0, " +
                            std::to_string(d) + ")");
    }
  };

  return std::visit(
      overloaded{
          [&](const fiducial::Constant&) {
            return make([&](int) { return Complex(1.0 / std::sqrt(dd)); });
          },
          [&](const fiducial::Kronecker& k) {
            check_index(k.k0, "kronecker");
            return ZdVector::kronecker(d, k.k0);
          },
          [&](const fiducial::PlaneWave& p) {
            check_index(p.k0, "plane_wave");
            return fourier_basis(d, p.k0);
          },
          [&](const fiducial::Gaussian& g) {
            if (!(g.kappa > 0.0) || !std::isfinite(g.kappa)) {
              throw InvalidArgument("gaussian: kappa must be positive");
            }
            // sum_n omega^{nl} exp(-pi n^2/(kappa d)) is theta_3(l/d, i/(kappa d)), with
            // the nominal prefactor theta_3(0, 2i/(kappa d))^{-1/2}.
            const double prefactor = 1.0 / std::sqrt(theta_3(0.0, 2.0 / (g.kappa * dd)).real());
            auto v = make([&](int l) { return prefactor * theta_3(l / dd, 1.0 / (g.kappa * dd)); });
            return renormalize_checked(std::move(v), "gaussian");
          },
          [&](const fiducial::Dirichlet& dk) {
            if (dk.j < 0 || 2 * dk.j + 1 > d) {
              throw InvalidArgument("dirichlet: need 0 <= j and 2j+1 <= d, got j=" + std::to_string(dk.j));
            }
            const double scale = 1.0 / std::sqrt(dd * (2 * dk.j + 1));
            auto v = make([&](int l) {
              Complex s = 0.0;
              for (int m = -dk.j; m <= dk.j; ++m) s += ph.omega(static_cast<std::int64_t>(m) * l);
              return scale * s;
            });
            return renormalize_checked(std::move(v), "dirichlet");
          },
          [&](const fiducial::VonMises& vm) {
            if (!(vm.lambda >= 0.0) || !std::isfinite(vm.lambda)) {
              throw InvalidArgument("von_mises: lambda must be non-negative");
            }
            // exp(lambda cos) / sqrt(d I0(2 lambda)), evaluated as exp(lambda (cos - 1)) and
            // normalized numerically; I0(2 lambda) overflows long before lambda = 400.
            auto v = make([&](int l) {
              return Complex(std::exp(vm.lambda * (std::cos(2.0 * std::numbers::pi * l / dd) - 1.0)));
            });
            return renormalize_checked(std::move(v), "von_mises");
          },
          [&](const fiducial::Custom& c) {
            require_same_dim(c.values.dim(), d, "custom fiducial");
            const double n = c.values.norm();
            if (n > 0.0 && std::abs(n - 1.0) > 1e-12) {
              std::cerr << "warning: custom fiducial has norm " << n << ", renormalizing\n";
            }
            return renormalize_checked(c.values, "custom");
          },
      },
      spec);
}

ZdVector coherent_state(const ZdVector& phi, PhasePoint p) {
  if (std::abs(phi.norm() - 1.0) > 1e-8) {
    std::cerr << "warning: coherent_state fiducial is not unit norm (" << phi.norm() << ")\n";
  }
  return displacement_apply(p, phi);
}

PhaseSpaceMap gabor_transform(const ZdVector& phi, const ZdVector& fiducial) {
  require_same_dim(phi.dim(), fiducial.dim(), "gabor_transform");
  const int d = phi.dim();
  const Phases ph(d);
  PhaseSpaceMap out(d);
#pragma omp parallel for schedule(static)
  for (int n = 0; n < d; ++n) {
    std::vector<Complex> windowed(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) windowed[l] = std::conj(fiducial.at(l - n)) * phi[l];
    for (int m = 0; m < d; ++m) {
      Complex s = 0.0;
      for (int l = 0; l < d; ++l) s += ph.omega(-static_cast<std::int64_t>(m) * l) * windowed[l];
      out(m, n) = std::conj(ph.chi(m, n)) * s;
    }
  }
  return out;
}

ZdVector gabor_inverse(const PhaseSpaceMap& coefficients, const ZdVector& fiducial) {
  require_same_dim(coefficients.dim(), fiducial.dim(), "gabor_inverse");
  const int d = fiducial.dim();
  const Phases ph(d);
  std::vector<Complex> out(static_cast<std::size_t>(d));
#pragma omp parallel for schedule(static)
  for (int l = 0; l < d; ++l) {
    Complex s = 0.0;
    for (int n = 0; n < d; ++n) {
      const Complex window = fiducial.at(l - n);
      if (window == Complex{}) continue;
      Complex row = 0.0;
      for (int m = 0; m < d; ++m) {
        row += coefficients(m, n) * ph.chi(m, n) * ph.omega(static_cast<std::int64_t>(m) * l);
      }
      s += row * window;
    }
    out[l] = s / static_cast<double>(d);
  }
  return ZdVector(std::move(out));
}

double isometry_residual(const ZdVector& phi, const ZdVector& fiducial) {
  const auto coeffs = gabor_transform(phi, fiducial);
  double energy = 0.0;
  for (const auto& z : coeffs.data()) energy += std::norm(z);
  return std::abs(phi.norm_squared() - energy / phi.dim());
}

double resolution_of_identity_residual(const ZdVector& fiducial) {
  const int d = fiducial.dim();
  OperatorMatrix frame(d);
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      const auto cs = displacement_apply(m, n, fiducial);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) frame(r, c) += cs[r] * std::conj(cs[c]);
    }
  }
  return max_abs_diff((1.0 / d) * frame, OperatorMatrix::identity(d));
}

PhaseSpaceMap ambiguity_function(const ZdVector& psi) {
  const int d = psi.dim();
  const Phases ph(d);
  PhaseSpaceMap out(d);
#pragma omp parallel for schedule(static)
  for (int dn = 0; dn < d; ++dn) {
    for (int dm = 0; dm < d; ++dm) {
      Complex s = 0.0;
      for (int l = 0; l < d; ++l) {
        s += ph.omega(-static_cast<std::int64_t>(dm) * l) * std::conj(psi.at(l - dn)) * psi[l];
      }
      out(dm, dn) = s;
    }
  }
  return out;
}

Complex reproducing_kernel(const ZdVector& psi, PhasePoint p, PhasePoint pp) {
  return inner(coherent_state(psi, p), coherent_state(psi, pp));
}

Complex reproducing_kernel_factored(const PhaseSpaceMap& ambiguity, PhasePoint p, PhasePoint pp) {
  const int d = ambiguity.dim();
  const Phases ph(d);
  p = p.reduced(d);
  pp = pp.reduced(d);
  const Complex a = ph.half(p.m * (p.n - pp.n) - (p.m - pp.m) * pp.n);
  return a * ambiguity.at(p.m - pp.m, p.n - pp.n);
}

namespace {

// Overlap function of the periodized Gaussian without the normalization constant:
// sum_j exp(-pi v^2/(kappa d)) theta_3(dn/d + i v/(kappa d), 2i/(kappa d)), v = dm + j d.
Complex gaussian_overlap(double kappa, int d, std::int64_t dm, std::int64_t dn) {
  const double kd = kappa * d;
  const double vmax = std::sqrt(2.0 * kd * 18.0 * std::log(10.0) / std::numbers::pi) + 1.0;
  const auto jlo = static_cast<std::int64_t>(std::floor((-vmax - dm) / d));
  const auto jhi = static_cast<std::int64_t>(std::ceil((vmax - dm) / d));
  Complex s = 0.0;
  for (std::int64_t j = jlo; j <= jhi; ++j) {
    const double v = static_cast<double>(dm + j * d);
    s += std::exp(-std::numbers::pi * v * v / kd) *
         theta_3(Complex(static_cast<double>(dn) / d, v / kd), 2.0 / kd);
  }
  return s;
}

}  // namespace

std::optional<Complex> closed_form_kernel(const FiducialSpec& spec, int d, PhasePoint p, PhasePoint pp) {
  const Phases ph(d);
  p = p.reduced(d);
  pp = pp.reduced(d);
  const auto [m, n] = p;
  const auto [mp, np] = pp;
  return std::visit(
      overloaded{
          [&](const fiducial::Constant&) -> std::optional<Complex> {
            return m == mp ? ph.half(m * (n - np)) : Complex{};
          },
          [&](const fiducial::Kronecker& k) -> std::optional<Complex> {
            return n == np ? ph.half(-(m - mp) * (n + 2 * k.k0)) : Complex{};
          },
          [&](const fiducial::PlaneWave& w) -> std::optional<Complex> {
            return m == mp ? ph.half(-(np - n) * (m + 2 * w.k0)) : Complex{};
          },
          [&](const fiducial::Dirichlet& dk) -> std::optional<Complex> {
            if (2 * dk.j + 1 != d) return std::nullopt;
            return n == np ? ph.half(-n * (m - mp)) : Complex{};
          },
          [&](const fiducial::Gaussian& g) -> std::optional<Complex> {
            const Complex a = ph.half(m * (n - np) - (m - mp) * np);
            return a * gaussian_overlap(g.kappa, d, mod(m - mp, d), mod(n - np, d)) /
                   gaussian_overlap(g.kappa, d, 0, 0);
          },
          [](const auto&) -> std::optional<Complex> { return std::nullopt; },
      },
      spec);
}

double reproducing_property_check(const ZdVector& fiducial, const ZdVector& phi) {
  const int d = fiducial.dim();
  const auto coeffs = gabor_transform(phi, fiducial);
  const auto amb = ambiguity_function(fiducial);
  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (int m = 0; m < d; ++m) {
    for (int n = 0; n < d; ++n) {
      Complex s = 0.0;
      for (int mp = 0; mp < d; ++mp)
        for (int np = 0; np < d; ++np)
          s += reproducing_kernel_factored(amb, {m, n}, {mp, np}) * coeffs(mp, np);
      worst = std::max(worst, std::abs(coeffs(m, n) - s / static_cast<double>(d)));
    }
  }
  return worst;
}

}  // namespace torusq
