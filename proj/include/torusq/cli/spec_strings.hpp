#pragma once

#include <string>

#include "torusq/quantization.hpp"

namespace torusq::cli {

/// Malformed command-line or file input (exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// constant | kronecker:K | plane_wave:K | gaussian:KAPPA | dirichlet:J | von_mises:LAMBDA | custom:PATH
FiducialSpec parse_fiducial(const std::string& text);

/// parity | cs:<fiducial> | file:PATH (d x d complex CSV)
Weight parse_weight(const std::string& text, int d);

}  // namespace torusq::cli
