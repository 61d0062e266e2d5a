#include "maxalg/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maxalg/errors.hpp"

namespace maxalg::io {

namespace {

using nlohmann::json;

double checked_value(double v, const std::string& where) {
  if (!std::isfinite(v) || v < 0.0) {
    throw validation_error(where + ": values must be finite and nonnegative");
  }
  return v;
}

double parse_number(std::string_view token, std::size_t line, std::size_t column) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw parse_error("line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": expected a number, got '" +
                      std::string(token) + "'");
  }
  return value;
}

MaxMatrix parse_text_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size()) break;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      const std::string_view token(line.data() + pos, end - pos);
      const double value = parse_number(token, line_number, pos + 1);
      row.push_back(checked_value(value, "line " + std::to_string(line_number)));
      pos = end;
    }
    if (row.empty()) continue;  // blank line
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw parse_error("line " + std::to_string(line_number) + ": expected " +
                        std::to_string(rows.front().size()) + " entries, got " +
                        std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw parse_error("matrix input is empty");
  }
  return MaxMatrix::from_rows(rows);
}

MaxMatrix parse_json_matrix(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("data")) {
    throw parse_error("matrix JSON requires the keys rows, cols and data");
  }
  MatrixDocument out;
  try {
    out.rows = doc.at("rows").get<std::size_t>();
    out.cols = doc.at("cols").get<std::size_t>();
    out.data = doc.at("data").get<std::vector<std::vector<double>>>();
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid matrix JSON: ") + e.what());
  }
  return from_document(out);
}

}  // namespace

MaxMatrix load_matrix(std::istream& in, MatrixFormat format) {
  if (format == MatrixFormat::Auto) {
    int c = in.peek();
    while (c != std::istream::traits_type::eof() &&
           std::isspace(static_cast<unsigned char>(c))) {
      in.get();
      c = in.peek();
    }
    format = c == '{' ? MatrixFormat::Json : MatrixFormat::Text;
  }
  return format == MatrixFormat::Json ? parse_json_matrix(in) : parse_text_matrix(in);
}

MaxMatrix load_matrix(const std::string& path, MatrixFormat format) {
  if (path == "-") {
    return load_matrix(std::cin, format);
  }
  std::ifstream in(path);
  if (!in) {
    throw parse_error("cannot open '" + path + "'");
  }
  return load_matrix(in, format);
}

MaxVector parse_vector(std::string_view text) {
  std::vector<double> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) {
      token.remove_prefix(1);
    }
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) {
      token.remove_suffix(1);
    }
    if (token.empty()) {
      throw parse_error("vector entry " + std::to_string(entries.size() + 1) + " is empty");
    }
    entries.push_back(checked_value(parse_number(token, 1, pos + 1), "vector"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return MaxVector::from_entries(std::move(entries));
}

MatrixDocument to_document(const MaxMatrix& m) {
  MatrixDocument doc;
  doc.rows = m.rows();
  doc.cols = m.cols();
  doc.data.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    doc.data[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) doc.data[i][j] = m(i, j);
  }
  return doc;
}

MaxMatrix from_document(const MatrixDocument& doc) {
  if (doc.data.size() != doc.rows) {
    throw validation_error("matrix document: data has " +
                           std::to_string(doc.data.size()) + " rows, expected " +
                           std::to_string(doc.rows));
  }
  for (const auto& row : doc.data) {
    if (row.size() != doc.cols) {
      throw validation_error("matrix document: ragged or mismatched row length");
    }
    for (double v : row) checked_value(v, "matrix document");
  }
  return MaxMatrix::from_rows(doc.data);
}

nlohmann::json matrix_json(const MaxMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    data.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

nlohmann::json vector_json(const MaxVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i]);
  return out;
}

std::string canonical_json(const nlohmann::json& doc) {
  return doc.dump();  // nlohmann orders object keys and emits shortest floats
}

std::string region_csv(const RegionSample& sample) {
  std::ostringstream out;
  const std::size_t n = sample.bounds.size();
  for (std::size_t d = 0; d < n; ++d) out << 'x' << (d + 1) << ',';
  out << "inside\n";
  for (std::size_t p = 0; p < sample.grid_points.size(); ++p) {
    for (std::size_t d = 0; d < n; ++d) {
      out << format_double(sample.grid_points[p][d]) << ',';
    }
    out << (sample.labels[p] ? '1' : '0') << '\n';
  }
  return out.str();
}

std::string format_double(double v) {
  return nlohmann::json(v).dump();
}

}  // namespace maxalg::io
