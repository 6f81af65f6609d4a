// Copyright 2026 The cgplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON file formats.
//
// Matrix:  {"rows": r, "cols": c, "data": [[[re, im], ...], ...]}
// Channel: {"kraus": [<matrix>, ...]}
// Path:    {"dim": d, "nodes": [{"t": t, "H": <matrix>}, ...],
//           "h": h, "step": step, "gap_tol": g (optional)}
// A Mori is stored as its frame matrix.

#ifndef CGPLAB_IO_HPP_
#define CGPLAB_IO_HPP_

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cgplab/channel.hpp"
#include "cgplab/diffgeo.hpp"
#include "cgplab/errors.hpp"
#include "cgplab/linalg.hpp"

namespace cgplab::io {

using Json = nlohmann::json;

/// Malformed document. Maps to CLI exit code 2.
class FormatError : public InputError {
 public:
  explicit FormatError(const std::string& what) : InputError("format", what) {}
};

Json matrix_to_json(const ComplexMatrix& m);
/// Throws FormatError on missing fields, wrong dimensions or non-finite
/// numbers.
ComplexMatrix matrix_from_json(const Json& doc);

/// Rows of plain numbers, for real-valued results such as overlap matrices.
Json real_matrix_to_json(const RealMatrix& m);

KrausChannel channel_from_json(const Json& doc);

struct PathSpec {
  HamiltonianPath path;
  double h;
  double step;
};
PathSpec path_from_json(const Json& doc, const Tolerance& tol = {});

/// Whole file as bytes. Throws InputError("io") when unreadable.
std::string read_file(const std::string& path);
/// Throws FormatError on invalid JSON.
Json parse_json(const std::string& text, const std::string& origin);

/// 64-bit FNV-1a of `bytes`, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

/// Sorted keys, shortest round-trip float formatting, trailing newline.
std::string dump(const Json& doc);

}  // namespace cgplab::io

#endif  // CGPLAB_IO_HPP_
