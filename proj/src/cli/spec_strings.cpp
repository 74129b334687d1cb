#include "torusq/cli/spec_strings.hpp"

#include <charconv>

#include "torusq/cli/io.hpp"

namespace torusq::cli {

namespace {

template <typename T>
T parse_number(const std::string& text, const std::string& context) {
  T value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InputError("cannot parse '" + text + "' as a number in '" + context + "'");
  }
  return value;
}

}  // namespace

FiducialSpec parse_fiducial(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const bool has_arg = colon != std::string::npos;
  const std::string arg = has_arg ? text.substr(colon + 1) : std::string();
  auto need_arg = [&] {
    if (!has_arg) throw InputError("fiducial '" + name + "' needs a parameter, e.g. " + name + ":1");
  };

  if (name == "constant") {
    if (has_arg) throw InputError("fiducial 'constant' takes no parameter");
    return fiducial::Constant{};
  }
  if (name == "kronecker") {
    need_arg();
    return fiducial::Kronecker{parse_number<int>(arg, text)};
  }
  if (name == "plane_wave") {
    need_arg();
    return fiducial::PlaneWave{parse_number<int>(arg, text)};
  }
  if (name == "gaussian") {
    need_arg();
    return fiducial::Gaussian{parse_number<double>(arg, text)};
  }
  if (name == "dirichlet") {
    need_arg();
    return fiducial::Dirichlet{parse_number<int>(arg, text)};
  }
  if (name == "von_mises") {
    need_arg();
    return fiducial::VonMises{parse_number<double>(arg, text)};
  }
  if (name == "custom") {
    need_arg();
    return fiducial::Custom{read_signal(arg)};
  }
  throw InputError("unknown fiducial '" + name +
                   "' (expected constant, kronecker, plane_wave, gaussian, dirichlet, von_mises or custom)");
}

Weight parse_weight(const std::string& text, int d) {
  if (text == "parity") return Weight::parity(d);
  if (text.rfind("cs:", 0) == 0) return Weight::coherent_state(realize_fiducial(parse_fiducial(text.substr(3)), d));
  if (text.rfind("file:", 0) == 0) {
    auto values = read_square_csv(text.substr(5));
    require_same_dim(values.dim(), d, "weight file");
    return Weight::from_values(std::move(values));
  }
  throw InputError("unknown weight '" + text + "' (expected parity, cs:<fiducial> or file:PATH)");
}

}  // namespace torusq::cli
