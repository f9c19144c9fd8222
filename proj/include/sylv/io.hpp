#pragma once

#include "sylv/matrix.hpp"

#include <string>
#include <vector>

namespace sylv {

// Text formats:
//   matrix: "rows cols" on the first line, then rows*cols whitespace-separated
//           entries in row-major order,
//   vector: "n" on the first line, then n entries.
// Entries are integers ("42"), decimals ("1.5", "2e-3", float64 backend only)
// or fractions ("-3/4", exact backend only).  Parse errors carry the file
// path and line number.

Matrix parse_matrix_file(const std::string& path, Backend backend);
std::vector<Scalar> parse_vector_file(const std::string& path, Backend backend);

Matrix parse_matrix_text(const std::string& text, Backend backend);
std::vector<Scalar> parse_vector_text(const std::string& text, Backend backend);

// Scans the files and picks the backend their entries demand: any fraction
// forces exact, any decimal forces float64, otherwise `fallback`.  A run with
// both fractions and decimals is a parse error.
Backend resolve_backend(const std::vector<std::string>& paths, Backend fallback);

std::string format_matrix(const Matrix& m);
std::string format_vector(const std::vector<Scalar>& v);

}  // namespace sylv
