// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torus_riesz/lattice_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "torus_riesz/error.hpp"

namespace torus_riesz {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::BadLatticeFile, "field \"" + field + "\": " + why);
}

}  // namespace

Lattice lattice_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::BadLatticeFile, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("<root>", "expected a JSON object");

  bool normalize = false;
  if (doc.contains("normalize_covolume")) {
    if (!doc["normalize_covolume"].is_boolean()) bad("normalize_covolume", "expected a boolean");
    normalize = doc["normalize_covolume"].get<bool>();
  }

  const bool has_name = doc.contains("name");
  const bool has_basis = doc.contains("basis");
  if (has_name == has_basis) bad(has_name ? "name" : "basis", "exactly one of \"name\" or \"basis\" is required");

  if (has_name) {
    if (!doc["name"].is_string()) bad("name", "expected a string");
    try {
      return named_lattice(doc["name"].get<std::string>(), normalize);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BadGramFile) throw;
      bad("name", e.what());
    }
  }

  const auto& rows = doc["basis"];
  if (!rows.is_array() || rows.empty()) bad("basis", "expected a non-empty array of rows");
  const auto d = rows.size();
  Matrix basis(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& row = rows[i];
    const std::string where = "basis[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != d) {
      bad(where, "expected an array of " + std::to_string(d) + " numbers");
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (!row[j].is_number()) bad(where + "[" + std::to_string(j) + "]", "expected a number");
      basis(j, i) = row[j].get<double>();  // row i of the file is column v_i
    }
  }
  Lattice lattice = [&] {
    try {
      return Lattice(basis);
    } catch (const Error& e) {
      bad("basis", e.what());
    }
  }();
  return normalize ? normalize_covolume(lattice) : lattice;
}

Lattice lattice_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadLatticeFile, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return lattice_from_json_text(buf.str());
}

}  // namespace torus_riesz
