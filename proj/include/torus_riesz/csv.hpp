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

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace torus_riesz::csv {

/// 17 significant digits, '.' decimal point regardless of locale.
std::string number(double value);
std::string number(std::int64_t value);
std::string number(std::uint64_t value);
inline std::string number(int value) { return number(static_cast<std::int64_t>(value)); }

/// Joins cells with ',' and terminates with a bare LF.
void write_row(std::ostream& out, const std::vector<std::string>& cells);

/// "# text" lines; embedded newlines each get their own prefix.
void write_comment(std::ostream& out, std::string_view text);

}  // namespace torus_riesz::csv
