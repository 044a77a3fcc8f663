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

#pragma once

#include <string>

#include "torus_riesz/lattice.hpp"

namespace torus_riesz {

// Lattice JSON: {"name": "hexagonal"} or {"basis": [[...], ...]} where row i
// holds the coordinates of basis vector v_i, plus an optional
// "normalize_covolume" boolean. Malformed input throws Error(BadLatticeFile)
// naming the offending field.
Lattice lattice_from_json_text(const std::string& text);
Lattice lattice_from_json_file(const std::string& path);

}  // namespace torus_riesz
