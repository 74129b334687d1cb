#include "torusq/cli/spectrogram.hpp"

#include <algorithm>
#include <numeric>

#include "torusq/core.hpp"

namespace torusq::cli {

std::vector<double> row_energy(const RealPhaseSpaceMap& magnitude) {
  const int d = magnitude.dim();
  std::vector<double> e(static_cast<std::size_t>(d), 0.0);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) e[m] += magnitude(m, n) * magnitude(m, n);
  return e;
}

double fraction_on_multiples(const std::vector<double>& energy, int step) {
  if (step <= 0) throw InvalidArgument("fraction_on_multiples: step must be positive");
  double total = 0.0, on = 0.0;
  for (std::size_t m = 1; m < energy.size(); ++m) {
    total += energy[m];
    if (m % static_cast<std::size_t>(step) == 0) on += energy[m];
  }
  return total > 0.0 ? on / total : 0.0;
}

PeriodReport detect_period(const std::vector<double>& energy, double capture) {
  const int d = static_cast<int>(energy.size());
  PeriodReport r;
  std::vector<int> rows;
  double total = 0.0;
  for (int m = 1; m < d; ++m) {
    rows.push_back(m);
    total += energy[m];
  }
  if (total <= 0.0) {
    // DC only: constant signal, period 1
    r.row_step = d;
    r.period = 1;
    r.step_fraction = 0.0;
    return r;
  }
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) { return energy[a] > energy[b]; });
  double acc = 0.0;
  int step = d;
  for (int m : rows) {
    if (acc >= capture * total) break;
    r.dominant_rows.push_back(m);
    acc += energy[m];
    step = std::gcd(step, m);
  }
  std::sort(r.dominant_rows.begin(), r.dominant_rows.end());
  r.row_step = step;
  r.period = d / step;
  r.step_fraction = fraction_on_multiples(energy, step);
  return r;
}

}  // namespace torusq::cli
