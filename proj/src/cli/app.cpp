#include "torusq/cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "torusq/cli/io.hpp"
#include "torusq/cli/spec_strings.hpp"
#include "torusq/cli/spectrogram.hpp"
#include "torusq/distributions.hpp"

namespace torusq::cli {

namespace {

struct Options {
  int d = 0;
  std::string in;
  std::string out;
  std::string fiducial = "von_mises:400";
  std::string weight = "parity";
  std::string symbol = "one";
  std::string shape = "general";
  std::string format = "csv";
  std::string resize = "none";
  std::string image;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

ResizePolicy resize_policy(const Options& o) {
  if (o.resize == "pad") return ResizePolicy::pad;
  if (o.resize == "truncate") return ResizePolicy::truncate;
  return ResizePolicy::none;
}

std::optional<int> declared_d(const Options& o) { return o.d > 0 ? std::optional<int>(o.d) : std::nullopt; }

ZdVector load_signal(const Options& o) { return read_signal(o.in, declared_d(o), resize_policy(o)); }

// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback, bool binary) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, binary ? std::ios::binary : std::ios::out);
      if (!*file_) throw InputError("cannot open '" + path + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

void emit_real(const Options& o, const RealPhaseSpaceMap& map, std::ostream& out) {
  Sink sink(o.out, out, o.format == "pgm");
  if (o.format == "pgm") {
    write_pgm(*sink, map);
  } else {
    write_real_csv(*sink, map);
  }
}

int cmd_gabor(const Options& o, std::ostream& out, std::ostream& err) {
  const auto signal = load_signal(o);
  const int d = signal.dim();
  const auto fid = realize_fiducial(parse_fiducial(o.fiducial), d);
  const auto coeffs = gabor_transform(signal, fid);
  RealPhaseSpaceMap magnitude(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) magnitude(m, n) = std::abs(coeffs(m, n));
  emit_real(o, magnitude, out);
  if (!o.image.empty()) {
    Sink image(o.image, out, true);
    write_pgm(*image, magnitude);
  }

  double energy = 0.0;
  for (const auto& z : coeffs.data()) energy += std::norm(z);
  const double residual = std::abs(signal.norm_squared() - energy / d);
  err << "d=" << d << " fiducial=" << o.fiducial << '\n';
  err << "isometry residual: " << sci(residual) << " (relative " << sci(residual / std::max(signal.norm_squared(), 1e-300))
      << ")\n";
  const auto e = row_energy(magnitude);
  const auto report = detect_period(e);
  err << "dominant frequency rows:";
  for (int m : report.dominant_rows) err << ' ' << m;
  err << "\nrow step " << report.row_step << ", period " << report.period << ", off-DC energy on multiples of "
      << report.row_step << ": " << sci(report.step_fraction) << '\n';
  return kSuccess;
}

int cmd_wigner(const Options& o, std::ostream& out, std::ostream& err) {
  const auto psi = load_signal(o);
  const auto W = wigner(psi);
  emit_real(o, W, out);
  const auto cols = W.column_sums();
  const auto rows = W.row_sums();
  const auto psi_hat = dft(psi);
  double position = 0.0, momentum = 0.0;
  for (int k = 0; k < psi.dim(); ++k) {
    position = std::max(position, std::abs(cols[k] - std::norm(psi[k])));
    momentum = std::max(momentum, std::abs(rows[k] - std::norm(psi_hat[k])));
  }
  err << "marginal residuals: position " << sci(position) << ", momentum " << sci(momentum) << '\n';
  return kSuccess;
}

int cmd_husimi(const Options& o, std::ostream& out, std::ostream& err) {
  const auto psi = load_signal(o);
  const auto fid = realize_fiducial(parse_fiducial(o.fiducial), psi.dim());
  const auto H = husimi(psi, fid);
  emit_real(o, H, out);
  err << "normalization residual: " << sci(std::abs(H.total() - psi.norm_squared())) << '\n';
  return kSuccess;
}

struct LoadedSymbol {
  ClassicalSymbol symbol;
  std::vector<Complex> vector;  // for momentum/position shapes
};

LoadedSymbol load_symbol(const Options& o) {
  auto vec_of = [](const ZdVector& v) { return std::vector<Complex>(v.values().begin(), v.values().end()); };
  if (o.symbol == "one" || o.symbol == "delta") {
    if (o.d <= 0) throw InputError("--symbol " + o.symbol + " needs --d");
    if (o.shape != "general") {
      std::vector<Complex> v(static_cast<std::size_t>(o.d), 0.0);
      if (o.symbol == "one") std::fill(v.begin(), v.end(), 1.0);
      else v[0] = 1.0;
      auto sym = o.shape == "momentum" ? ClassicalSymbol::momentum(v) : ClassicalSymbol::position(v);
      return {std::move(sym), v};
    }
    auto f = o.symbol == "one" ? PhaseSpaceMap::constant(o.d, 1.0) : PhaseSpaceMap::delta(o.d, 0, 0, 1.0);
    return {ClassicalSymbol::general(std::move(f)), {}};
  }
  if (o.shape == "general") {
    auto f = read_square_csv(o.symbol);
    if (o.d > 0) require_same_dim(f.dim(), o.d, "symbol file");
    return {ClassicalSymbol::general(std::move(f)), {}};
  }
  const auto v = vec_of(read_signal(o.symbol, declared_d(o), resize_policy(o)));
  auto sym = o.shape == "momentum" ? ClassicalSymbol::momentum(v) : ClassicalSymbol::position(v);
  return {std::move(sym), v};
}

int cmd_quantize(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = load_symbol(o);
  const auto w = parse_weight(o.weight, s.symbol.dim());
  const auto A = o.shape == "momentum"   ? quantize_momentum(s.vector, w)
                 : o.shape == "position" ? quantize_position(s.vector, w)
                                         : quantize(s.symbol, w);
  Sink sink(o.out, out, false);
  write_complex_csv(*sink, A);
  const Complex tr = A.trace();
  err << "hermiticity residual: " << sci(A.hermiticity_residual()) << '\n';
  err << "trace: " << format_number(tr.real()) << " " << format_number(tr.imag()) << "i\n";
  return kSuccess;
}

int cmd_portrait(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = load_symbol(o);
  const auto w = parse_weight(o.weight, s.symbol.dim());
  const auto fcheck = portrait_of_symbol(s.symbol, w);
  Sink sink(o.out, out, false);
  write_complex_csv(*sink, fcheck);
  const Complex mass = overlap_kernel(w).total();
  err << "smoothing kernel mass: " << format_number(mass.real()) << " (residual " << sci(std::abs(mass - 1.0))
      << ")\n";
  err << "portrait max |Im|: " << sci(max_imaginary(fcheck)) << '\n';
  return kSuccess;
}

int cmd_fiducials(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.d <= 0) throw InputError("fiducials needs --d");
  const auto v = realize_fiducial(parse_fiducial(o.fiducial), o.d);
  Sink sink(o.out, out, false);
  write_vector_csv(*sink, v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v.norm());
  err << "norm " << buf << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Weyl-Heisenberg quantization and time-frequency maps on Z_d x Z_d", "torus-quant"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output file (default: stdout)"); };
  auto add_signal = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "Signal file (.csv or .json)")->required()->check(CLI::ExistingFile);
    sub->add_option("--d", o.d, "Declared dimension (defaults to the signal length)")->check(CLI::PositiveNumber);
    sub->add_option("--resize", o.resize, "Adjust a signal whose length differs from --d")
        ->check(CLI::IsMember({"none", "pad", "truncate"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or pgm")->check(CLI::IsMember({"csv", "pgm"}));
  };
  auto add_symbol = [&](CLI::App* sub) {
    sub->add_option("--symbol", o.symbol, "one, delta, or a CSV/JSON file");
    sub->add_option("--shape", o.shape, "Symbol shape")->check(CLI::IsMember({"general", "momentum", "position"}));
    sub->add_option("--weight", o.weight, "parity | cs:<fiducial> | file:PATH");
    sub->add_option("--d", o.d, "Dimension (required for one/delta)")->check(CLI::PositiveNumber);
    sub->add_option("--resize", o.resize, "Adjust a vector symbol whose length differs from --d")
        ->check(CLI::IsMember({"none", "pad", "truncate"}));
  };

  auto* gabor = app.add_subcommand("gabor", "Spectrogram |Phi(m,n)| of a signal");
  add_signal(gabor);
  add_common(gabor);
  add_format(gabor);
  gabor->add_option("--fiducial", o.fiducial, "Window, e.g. von_mises:400");
  gabor->add_option("--image", o.image, "Also write a PGM image here");

  auto* wig = app.add_subcommand("wigner", "Wigner distribution (odd d)");
  add_signal(wig);
  add_common(wig);
  add_format(wig);

  auto* hus = app.add_subcommand("husimi", "Husimi distribution");
  add_signal(hus);
  add_common(hus);
  add_format(hus);
  hus->add_option("--fiducial", o.fiducial, "Fiducial vector");

  auto* quant = app.add_subcommand("quantize", "Operator A_f for a classical symbol");
  add_symbol(quant);
  add_common(quant);

  auto* port = app.add_subcommand("portrait", "Semi-classical portrait of a symbol");
  add_symbol(port);
  add_common(port);

  auto* fids = app.add_subcommand("fiducials", "Print a realized fiducial vector");
  fids->add_option("--d", o.d, "Dimension")->required()->check(CLI::PositiveNumber);
  fids->add_option("--fiducial", o.fiducial, "Fiducial spec");
  add_common(fids);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (gabor->parsed()) return cmd_gabor(o, out, err);
    if (wig->parsed()) return cmd_wigner(o, out, err);
    if (hus->parsed()) return cmd_husimi(o, out, err);
    if (quant->parsed()) return cmd_quantize(o, out, err);
    if (port->parsed()) return cmd_portrait(o, out, err);
    if (fids->parsed()) return cmd_fiducials(o, out, err);
  } catch (const PreconditionViolation& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const ToleranceFailure& e) {
    err << "error: " << e.what() << '\n';
    return kToleranceFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace torusq::cli
