#pragma once

#include <vector>

#include "torusq/matrix.hpp"

namespace torusq::cli {

/// Energy per frequency row: E(m) = sum_n a(m,n)^2 for a magnitude map a.
std::vector<double> row_energy(const RealPhaseSpaceMap& magnitude);

/// Share of the off-DC energy (rows m != 0) carried by rows that are multiples of step.
double fraction_on_multiples(const std::vector<double>& energy, int step);

struct PeriodReport {
  std::vector<int> dominant_rows;  ///< strongest off-DC rows holding >= `capture` of the energy
  int row_step = 0;                ///< gcd of the dominant rows and d
  int period = 0;                  ///< d / row_step
  double step_fraction = 0.0;      ///< fraction_on_multiples(energy, row_step)
};

PeriodReport detect_period(const std::vector<double>& energy, double capture = 0.9);

}  // namespace torusq::cli
