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

#include "cgplab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace cgplab::io {

namespace {

double finite_number(const Json& v, const char* what) {
  if (!v.is_number()) throw FormatError(std::string(what) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw FormatError(std::string(what) + ": non-finite number");
  return x;
}

Eigen::Index positive_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw FormatError(std::string("matrix: missing integer field \"") + key + "\"");
  }
  const auto v = doc.at(key).get<long long>();
  if (v <= 0) throw FormatError(std::string("matrix: \"") + key + "\" must be positive");
  return static_cast<Eigen::Index>(v);
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object()) throw FormatError("matrix: expected a JSON object");
  const Eigen::Index rows = positive_int(doc, "rows");
  const Eigen::Index cols = positive_int(doc, "cols");
  if (!doc.contains("data") || !doc.at("data").is_array()) {
    throw FormatError("matrix: missing array field \"data\"");
  }
  const Json& data = doc.at("data");
  if (static_cast<Eigen::Index>(data.size()) != rows) {
    throw FormatError("matrix: \"data\" has " + std::to_string(data.size()) +
                      " rows, expected " + std::to_string(rows));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = data.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw FormatError("matrix: row " + std::to_string(i) + " does not have " +
                        std::to_string(cols) + " entries");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      const Json& entry = row.at(static_cast<std::size_t>(j));
      if (entry.is_array() && entry.size() == 2) {
        m(i, j) = Complex(finite_number(entry[0], "matrix entry"),
                          finite_number(entry[1], "matrix entry"));
      } else if (entry.is_number()) {
        m(i, j) = Complex(finite_number(entry, "matrix entry"), 0.0);
      } else {
        throw FormatError("matrix: entry must be [re, im]");
      }
    }
  }
  return m;
}

Json real_matrix_to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

KrausChannel channel_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kraus") || !doc.at("kraus").is_array()) {
    throw FormatError("channel: expected an object with array field \"kraus\"");
  }
  std::vector<ComplexMatrix> kraus;
  for (const Json& k : doc.at("kraus")) kraus.push_back(matrix_from_json(k));
  return KrausChannel(std::move(kraus));
}

PathSpec path_from_json(const Json& doc, const Tolerance& tol) {
  if (!doc.is_object()) throw FormatError("path: expected a JSON object");
  for (const char* key : {"dim", "nodes", "h", "step"}) {
    if (!doc.contains(key)) {
      throw FormatError(std::string("path: missing field \"") + key + "\"");
    }
  }
  const Eigen::Index dim = positive_int(doc, "dim");
  if (!doc.at("nodes").is_array()) throw FormatError("path: \"nodes\" must be an array");
  std::vector<HamiltonianPath::Node> nodes;
  for (const Json& node : doc.at("nodes")) {
    if (!node.is_object() || !node.contains("t") || !node.contains("H")) {
      throw FormatError("path: each node needs \"t\" and \"H\"");
    }
    ComplexMatrix h = matrix_from_json(node.at("H"));
    if (h.rows() != dim || h.cols() != dim) {
      throw FormatError("path: node matrix does not match \"dim\"");
    }
    nodes.push_back({finite_number(node.at("t"), "path node t"), std::move(h)});
  }
  const double gap_tol =
      doc.contains("gap_tol") ? finite_number(doc.at("gap_tol"), "gap_tol") : 1e-8;
  return {HamiltonianPath(std::move(nodes), gap_tol, tol),
          finite_number(doc.at("h"), "h"), finite_number(doc.at("step"), "step")};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("io", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(origin + ": " + e.what());
  }
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cgplab::io
