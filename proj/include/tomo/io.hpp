// Copyright 2026 The tomo Authors
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

#include "json.hpp"
#include "tomo/frame.hpp"
#include "tomo/generators.hpp"

namespace tomo {

using nlohmann::json;

// {"dim": n, "entries": [[re, im], ...]} row-major, optional "flags".
json matrix_to_json(const Mat& m);
json operator_to_json(const Operator& op);
Operator operator_from_json(const json& j);

// {"dim", "projectors": [matrix...], "labels": [...], optional "weights"}
json set_to_json(const TomographicSet& set);
TomographicSet set_from_json(const json& j);

// {"labels", "values", optional "values_antihermitian", "set_id", "dim", "grid"}
json table_to_json(const TomogramTable& t);
json split_to_json(const SplitTomogram& s);
TomogramTable table_from_json(const json& j);
// True when the table carries an anti-Hermitian half.
bool is_split_table(const json& j);
SplitTomogram split_from_json(const json& j);

// {"fiducial": matrix, "family": [matrix...], optional "labels"}
std::pair<Mat, UnitaryFamily> family_from_json(const json& j);

// Parse text; ParseError mentions source, line and column.
json parse_json_text(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

// Serializer printing every floating-point number with 17 significant digits.
std::string dump_json(const json& j, int indent = 2);

}  // namespace tomo
