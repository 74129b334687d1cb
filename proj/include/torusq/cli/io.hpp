#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "torusq/matrix.hpp"

namespace torusq::cli {

enum class ResizePolicy { none, pad, truncate };

/// Sequence from CSV (re | re,im | index,re,im columns, optional header) or
/// JSON ({"d": D, "values": [[re, im], ...]} or a bare array). A declared d
/// that differs from the sequence length is an error unless `resize` allows it.
ZdVector read_signal(const std::string& path, std::optional<int> d = std::nullopt,
                     ResizePolicy resize = ResizePolicy::none);

/// d x d map from CSV with d rows of 2d (re, im) or d (real) values, optionally
/// preceded by an index column and a header row.
PhaseSpaceMap read_square_csv(const std::string& path);

/// "%.15e"
std::string format_number(double v);

void write_complex_csv(std::ostream& os, const detail::SquareArray<Complex>& a);
void write_real_csv(std::ostream& os, const RealPhaseSpaceMap& a);
void write_vector_csv(std::ostream& os, const ZdVector& v);

/// Binary 8-bit PGM, row m on line m; values mapped linearly with the maximum at 255
/// (and the minimum at 0 when negative values are present).
void write_pgm(std::ostream& os, const RealPhaseSpaceMap& a);

/// Parses a complex CSV produced by write_complex_csv.
PhaseSpaceMap parse_complex_csv(std::istream& is, const std::string& source);
/// Parses a real CSV produced by write_real_csv.
RealPhaseSpaceMap parse_real_csv(std::istream& is, const std::string& source);

}  // namespace torusq::cli
