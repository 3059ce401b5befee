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

#ifndef QLENT_MATRIX_IO_HPP
#define QLENT_MATRIX_IO_HPP

#include <optional>
#include <string>

#include "qlent/states.hpp"

namespace qlent {

// Default CLI cap on file-borne matrix dimensions (eigensolves are cubic).
inline constexpr int kIoMaxDim = 256;

// On-disk state description: JSON object with a "dim" integer, a dim x dim
// "entries" array of [re, im] pairs, and optional "split" ([dimA, dimB])
// and "label" fields. Numbers are written with 17 significant digits, so a
// write -> parse -> write cycle is byte-identical.
struct MatrixFile {
  ComplexMatrix matrix;
  std::optional<BipartiteSplit> split;
  std::string label;
};

// Parse/serialize without validation beyond shape checks. Parse errors
// carry line and field context.
MatrixFile parse_matrix_json(const std::string& text, int max_dim = kIoMaxDim);
std::string to_matrix_json(const MatrixFile& file);

MatrixFile read_matrix_file(const std::string& path, int max_dim = kIoMaxDim);
void write_matrix_file(const std::string& path, const MatrixFile& file);

// Density-validated view of a state file.
struct ParsedState {
  DensityMatrix state;
  std::optional<BipartiteSplit> split;
  std::string label;
};
ParsedState parse_density_file(const std::string& path, int max_dim = kIoMaxDim);

// Projector-set file: {"dim": d, "projectors": [entries, entries, ...]}
// with the same [re, im] entry encoding.
std::vector<ComplexMatrix> read_projector_file(const std::string& path,
                                               int max_dim = kIoMaxDim);
std::string to_projectors_json(const std::vector<ComplexMatrix>& projectors);

// FNV-1a 64-bit content digest, as 16 hex characters.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace qlent

#endif  // QLENT_MATRIX_IO_HPP
