// Copyright 2026 The qlent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlent/matrix_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qlent {

namespace {

using nlohmann::json;

// 17 significant digits round-trip binary64 exactly, and re-serializing
// the parsed value reproduces the same text.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of_offset(text, e.byte)) +
                     ": " + e.what());
  }
}

double number_field(const json& j, const std::string& context) {
  if (!j.is_number()) {
    throw ParseError(context + ": expected a number");
  }
  return j.get<double>();
}

ComplexMatrix entries_to_matrix(const json& entries, int dim,
                                const std::string& context) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != dim) {
    throw ParseError(context + ": expected " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError(context + ": row " + std::to_string(i) + " must have " +
                       std::to_string(dim) + " entries");
    }
    for (int j = 0; j < dim; ++j) {
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != 2) {
        throw ParseError(context + ": entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") must be a [re, im] pair");
      }
      const std::string cell_ctx = context + ": entry (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")";
      m(i, j) = Complex(number_field(cell[0], cell_ctx),
                        number_field(cell[1], cell_ctx));
    }
  }
  if (!m.all_finite()) {
    throw ParseError(context + ": non-finite entries");
  }
  return m;
}

int read_dim(const json& doc, int max_dim) {
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("field 'dim': missing or not an integer");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("field 'dim': must be positive");
  if (dim > max_dim) {
    throw ParseError("field 'dim': " + std::to_string(dim) +
                     " exceeds the cap " + std::to_string(max_dim) +
                     " (raise it explicitly to allow larger inputs)");
  }
  return dim;
}

std::string matrix_rows_json(const ComplexMatrix& m, const std::string& indent) {
  std::ostringstream out;
  out << "[\n";
  for (int i = 0; i < m.dim(); ++i) {
    out << indent << "  [";
    for (int j = 0; j < m.dim(); ++j) {
      const Complex v = m(i, j);
      out << "[" << format_double(v.real()) << ", " << format_double(v.imag()) << "]";
      if (j + 1 < m.dim()) out << ", ";
    }
    out << "]";
    if (i + 1 < m.dim()) out << ",";
    out << "\n";
  }
  out << indent << "]";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failure on '" + path + "'");
}

}  // namespace

MatrixFile parse_matrix_json(const std::string& text, int max_dim) {
  const json doc = parse_json_text(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");

  const int dim = read_dim(doc, max_dim);
  if (!doc.contains("entries")) throw ParseError("field 'entries': missing");

  MatrixFile file{entries_to_matrix(doc["entries"], dim, "field 'entries'"),
                  std::nullopt, ""};

  if (doc.contains("split")) {
    const json& s = doc["split"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
        !s[1].is_number_integer()) {
      throw ParseError("field 'split': expected [dimA, dimB]");
    }
    BipartiteSplit split{s[0].get<int>(), s[1].get<int>()};
    if (split.dim_a < 1 || split.dim_b < 1 || split.dim_a * split.dim_b != dim) {
      throw ParseError("field 'split': " + std::to_string(split.dim_a) + "x" +
                       std::to_string(split.dim_b) + " does not factor dim " +
                       std::to_string(dim));
    }
    file.split = split;
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("field 'label': expected a string");
    file.label = doc["label"].get<std::string>();
  }
  return file;
}

std::string to_matrix_json(const MatrixFile& file) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"dim\": " << file.matrix.dim() << ",\n";
  if (!file.label.empty()) {
    out << "  \"label\": " << json(file.label).dump() << ",\n";
  }
  if (file.split) {
    out << "  \"split\": [" << file.split->dim_a << ", " << file.split->dim_b
        << "],\n";
  }
  out << "  \"entries\": " << matrix_rows_json(file.matrix, "  ") << "\n";
  out << "}\n";
  return out.str();
}

MatrixFile read_matrix_file(const std::string& path, int max_dim) {
  return parse_matrix_json(read_text_file(path), max_dim);
}

void write_matrix_file(const std::string& path, const MatrixFile& file) {
  write_text_file(path, to_matrix_json(file));
}

ParsedState parse_density_file(const std::string& path, int max_dim) {
  MatrixFile file = read_matrix_file(path, max_dim);
  return ParsedState{DensityMatrix::validated(file.matrix), file.split,
                     std::move(file.label)};
}

std::vector<ComplexMatrix> read_projector_file(const std::string& path, int max_dim) {
  const std::string text = read_text_file(path);
  const json doc = parse_json_text(text);
  if (!doc.is_object()) throw ParseError("top level must be an object");

  const int dim = read_dim(doc, max_dim);
  if (!doc.contains("projectors") || !doc["projectors"].is_array() ||
      doc["projectors"].empty()) {
    throw ParseError("field 'projectors': expected a non-empty array");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(doc["projectors"].size());
  for (std::size_t k = 0; k < doc["projectors"].size(); ++k) {
    out.push_back(entries_to_matrix(doc["projectors"][k], dim,
                                    "projector " + std::to_string(k)));
  }
  return out;
}

std::string to_projectors_json(const std::vector<ComplexMatrix>& projectors) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"dim\": " << (projectors.empty() ? 0 : projectors.front().dim())
      << ",\n";
  out << "  \"projectors\": [\n";
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    out << "    " << matrix_rows_json(projectors[k], "    ");
    if (k + 1 < projectors.size()) out << ",";
    out << "\n";
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace qlent
