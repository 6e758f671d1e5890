#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cnb/matrix.hpp"

namespace cnb {

/// Parses `a`, `a+bi`, `a-bi`, `bi` (also bare `i`, `+i`, `-i`); decimal or
/// scientific notation in the parts. Throws ParseError on anything else or
/// on non-finite values.
Cplx parse_complex(std::string_view text);

/// Round-trippable text: 17 significant digits, no internal whitespace.
std::string format_complex(Cplx z);
/// Same with explicit precision (human summaries use 6).
std::string format_complex(Cplx z, int precision);

std::string format_double(double x, int precision = 17);

/// Matrix file format: a "rows cols" header line, then one line per row of
/// whitespace-separated complex literals.
ComplexMatrix read_matrix(std::istream& in);
ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);
std::string matrix_to_string(const ComplexMatrix& m);
ComplexMatrix matrix_from_string(const std::string& text);

} // namespace cnb
