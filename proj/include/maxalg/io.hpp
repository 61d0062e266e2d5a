#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "maxalg/majorization.hpp"
#include "maxalg/matrix.hpp"
#include "maxalg/vector.hpp"

namespace maxalg::io {

enum class MatrixFormat { Auto, Json, Text };

/// Wire form of a matrix: {"rows": n, "cols": m, "data": [[...]]}.
struct MatrixDocument {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<double>> data;
};

/// Reads a matrix from JSON or whitespace/newline text. Auto mode sniffs a
/// leading '{'. Malformed input raises parse_error (text parses report line
/// and column); negative or non-finite values raise validation_error.
MaxMatrix load_matrix(std::istream& in, MatrixFormat format = MatrixFormat::Auto);

/// Same, from a file path; "-" reads standard input.
MaxMatrix load_matrix(const std::string& path, MatrixFormat format = MatrixFormat::Auto);

/// Comma-separated nonnegative decimals, e.g. "2,1".
MaxVector parse_vector(std::string_view text);

MatrixDocument to_document(const MaxMatrix& m);
MaxMatrix from_document(const MatrixDocument& doc);

nlohmann::json matrix_json(const MaxMatrix& m);
nlohmann::json vector_json(const MaxVector& v);

/// Canonical serialization: sorted keys, compact separators, shortest
/// round-trip float text, trailing newline excluded.
std::string canonical_json(const nlohmann::json& doc);

/// Header x1,...,xn,inside; one grid point per row, row-major order.
std::string region_csv(const RegionSample& sample);

std::string format_double(double v);

}  // namespace maxalg::io
