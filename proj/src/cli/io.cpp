#include "torusq/cli/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "torusq/cli/spec_strings.hpp"

namespace torusq::cli {

namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_double(const std::string& s, double& v) {
  const char* b = s.data();
  const char* e = b + s.size();
  if (b != e && *b == '+') ++b;
  const auto [ptr, ec] = std::from_chars(b, e, v);
  return b != e && ec == std::errc() && ptr == e;
}

CsvTable read_csv(std::istream& is, const std::string& source) {
  CsvTable t;
  std::string line;
  int line_no = 0;
  bool first = true;
  while (std::getline(is, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto fields = split(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (!parse_double(fields[c], row[c])) {
        if (first) {
          numeric = false;
          break;
        }
        throw InputError(source + ": row " + std::to_string(line_no) + ", column " + std::to_string(c + 1) +
                         ": cannot parse '" + fields[c] + "' as a number");
      }
    }
    if (first && !numeric) {
      t.header = fields;
    } else {
      if (!t.rows.empty() && row.size() != t.rows.front().size()) {
        throw InputError(source + ": row " + std::to_string(line_no) + " has " + std::to_string(row.size()) +
                         " columns, expected " + std::to_string(t.rows.front().size()));
      }
      t.rows.push_back(std::move(row));
    }
    first = false;
  }
  if (t.rows.empty()) throw InputError(source + ": no data rows");
  return t;
}

bool has_index_column(const CsvTable& t) { return !t.header.empty() && t.header.front() == "index"; }

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

ZdVector signal_from_json(const std::string& path, std::optional<int>& declared) {
  auto in = open_input(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
  const nlohmann::json* values = &j;
  if (j.is_object()) {
    if (!j.contains("values")) throw InputError(path + ": JSON object needs a \"values\" array");
    values = &j["values"];
    if (j.contains("d")) {
      if (!j["d"].is_number_integer()) throw InputError(path + ": \"d\" must be an integer");
      const int d = j["d"].get<int>();
      if (declared && *declared != d) {
        throw InputError(path + ": file declares d=" + std::to_string(d) + " but --d is " + std::to_string(*declared));
      }
      declared = d;
    }
  }
  if (!values->is_array()) throw InputError(path + ": \"values\" must be an array");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < values->size(); ++i) {
    const auto& v = (*values)[i];
    if (v.is_number()) {
      out.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw InputError(path + ": entry " + std::to_string(i) + " must be a number or [re, im]");
    }
  }
  if (out.empty()) throw InputError(path + ": empty signal");
  return ZdVector(std::move(out));
}

ZdVector signal_from_csv(const std::string& path) {
  auto in = open_input(path);
  const auto t = read_csv(in, path);
  const std::size_t cols = t.rows.front().size();
  const std::size_t offset = (has_index_column(t) || cols == 3) ? 1 : 0;
  if (cols - offset != 1 && cols - offset != 2) {
    throw InputError(path + ": expected 1 or 2 value columns (re[,im]), got " + std::to_string(cols - offset));
  }
  std::vector<Complex> out;
  for (const auto& r : t.rows) out.emplace_back(r[offset], cols - offset == 2 ? r[offset + 1] : 0.0);
  return ZdVector(std::move(out));
}

}  // namespace

ZdVector read_signal(const std::string& path, std::optional<int> d, ResizePolicy resize) {
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  auto signal = json ? signal_from_json(path, d) : signal_from_csv(path);
  if (!d || *d == signal.dim()) return signal;
  if (*d < 1) throw InputError("d must be positive");
  const int len = signal.dim();
  if ((resize == ResizePolicy::pad && len < *d) || (resize == ResizePolicy::truncate && len > *d)) {
    std::vector<Complex> v(signal.values().begin(), signal.values().end());
    v.resize(static_cast<std::size_t>(*d));
    return ZdVector(std::move(v));
  }
  throw InputError(path + ": signal length " + std::to_string(len) + " does not match d=" + std::to_string(*d) +
                   (len < *d ? " (use --resize pad)" : " (use --resize truncate)"));
}

PhaseSpaceMap parse_complex_csv(std::istream& is, const std::string& source) {
  const auto t = read_csv(is, source);
  const int d = static_cast<int>(t.rows.size());
  const std::size_t offset = has_index_column(t) || t.rows.front().size() == std::size_t(2 * d + 1) ? 1 : 0;
  const std::size_t cols = t.rows.front().size() - offset;
  const bool complex = cols == std::size_t(2 * d);
  if (!complex && cols != std::size_t(d)) {
    throw InputError(source + ": " + std::to_string(d) + " rows need " + std::to_string(2 * d) +
                     " (re, im) or " + std::to_string(d) + " real value columns, got " + std::to_string(cols));
  }
  PhaseSpaceMap out(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      out(r, c) = complex ? Complex(t.rows[r][offset + 2 * c], t.rows[r][offset + 2 * c + 1])
                          : Complex(t.rows[r][offset + c], 0.0);
  return out;
}

RealPhaseSpaceMap parse_real_csv(std::istream& is, const std::string& source) {
  const auto t = read_csv(is, source);
  const int d = static_cast<int>(t.rows.size());
  const std::size_t offset = has_index_column(t) || t.rows.front().size() == std::size_t(d + 1) ? 1 : 0;
  if (t.rows.front().size() - offset != std::size_t(d)) {
    throw InputError(source + ": expected " + std::to_string(d) + " value columns");
  }
  RealPhaseSpaceMap out(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out(r, c) = t.rows[r][offset + c];
  return out;
}

PhaseSpaceMap read_square_csv(const std::string& path) {
  auto in = open_input(path);
  return parse_complex_csv(in, path);
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15e", v == 0.0 ? 0.0 : v);
  return buf;
}

void write_complex_csv(std::ostream& os, const detail::SquareArray<Complex>& a) {
  const int d = a.dim();
  os << "index";
  for (int c = 0; c < d; ++c) os << ",re_" << c << ",im_" << c;
  os << '\n';
  for (int r = 0; r < d; ++r) {
    os << r;
    for (int c = 0; c < d; ++c) os << ',' << format_number(a(r, c).real()) << ',' << format_number(a(r, c).imag());
    os << '\n';
  }
}

void write_real_csv(std::ostream& os, const RealPhaseSpaceMap& a) {
  const int d = a.dim();
  os << "index";
  for (int c = 0; c < d; ++c) os << ",c_" << c;
  os << '\n';
  for (int r = 0; r < d; ++r) {
    os << r;
    for (int c = 0; c < d; ++c) os << ',' << format_number(a(r, c));
    os << '\n';
  }
}

void write_vector_csv(std::ostream& os, const ZdVector& v) {
  os << "index,re,im\n";
  for (int l = 0; l < v.dim(); ++l) os << l << ',' << format_number(v[l].real()) << ',' << format_number(v[l].imag()) << '\n';
}

void write_pgm(std::ostream& os, const RealPhaseSpaceMap& a) {
  const int d = a.dim();
  const double hi = a.max();
  const double lo = std::min(0.0, a.min());
  const double span = hi - lo;
  os << "P5\n" << d << ' ' << d << "\n255\n";
  for (double v : a.data()) {
    const double level = span > 0.0 ? std::round(255.0 * (v - lo) / span) : 0.0;
    os.put(static_cast<char>(static_cast<unsigned char>(std::clamp(level, 0.0, 255.0))));
  }
}

}  // namespace torusq::cli
