#pragma once

#include <initializer_list>
#include <random>

#include "torusq/distributions.hpp"

namespace torusq::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x746f7275);
  return engine;
}

inline Complex random_complex() {
  std::normal_distribution<double> g;
  return {g(rng()), g(rng())};
}

inline ZdVector vec(std::initializer_list<Complex> values) { return ZdVector(std::vector<Complex>(values)); }

inline ZdVector random_vector(int d) {
  std::vector<Complex> v(static_cast<std::size_t>(d));
  for (auto& z : v) z = random_complex();
  return ZdVector(std::move(v));
}

inline ZdVector random_unit_vector(int d) { return random_vector(d).normalized(); }

inline std::vector<Complex> random_values(int d) {
  std::vector<Complex> v(static_cast<std::size_t>(d));
  for (auto& z : v) z = random_complex();
  return v;
}

inline PhaseSpaceMap random_map(int d) {
  PhaseSpaceMap f(d);
  for (auto& z : f.data()) z = random_complex();
  return f;
}

inline OperatorMatrix random_operator(int d) {
  OperatorMatrix a(d);
  for (auto& z : a.data()) z = random_complex();
  return a;
}

inline ClassicalSymbol random_symbol(int d) { return ClassicalSymbol::general(random_map(d)); }

/// Random weight with w(0,0) = 1 and no symmetry.
inline Weight random_weight(int d) {
  auto f = random_map(d);
  f(0, 0) = 1.0;
  return Weight::from_values(std::move(f));
}

/// Random weight satisfying conj(w(q)) = sigma(q) w(-q).
inline Weight random_symmetric_weight(int d) {
  const auto g = random_map(d);
  PhaseSpaceMap w(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      w(m, n) = 0.5 * (g(m, n) + static_cast<double>(adjoint_sign(m, n, d)) * std::conj(g.at(-m, -n)));
  w(0, 0) = 1.0;
  return Weight::from_values(std::move(w));
}

inline double max_abs(const PhaseSpaceMap& f) {
  double m = 0.0;
  for (const auto& z : f.data()) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace torusq::testing
