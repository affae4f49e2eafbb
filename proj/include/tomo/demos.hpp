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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tomo {

struct RunConfig {
  std::optional<int> N;          // truncation; each demo has its own default
  std::optional<double> tol;     // overrides the demo's main threshold
  std::uint64_t seed = 20260101;
  std::string out;               // empty: stdout
  int samples = 0;               // 0: demo default
  int spin_theta = 8;
  int spin_phi = 16;
  int position_points = 512;
  double position_extent = 8.0;
  double photon_radius = 4.0;
  int photon_radial = 32;
  int photon_angular = 32;
  int photon_support = 4;

  // Keys of the same names; unknown keys -> UsageError.
  static RunConfig from_json(const nlohmann::json& j);
  void validate() const;
};

struct DemoReport {
  std::string name;
  bool passed = false;
  nlohmann::json details;
};

const std::vector<std::string>& demo_names();
DemoReport run_demo(const std::string& name, const RunConfig& cfg);

DemoReport demo_spin(const RunConfig& cfg);
DemoReport demo_discrete(const RunConfig& cfg);
DemoReport demo_symplectic(const RunConfig& cfg);
DemoReport demo_photon(const RunConfig& cfg);
DemoReport demo_squeeze(const RunConfig& cfg);
DemoReport demo_z2(const RunConfig& cfg);

}  // namespace tomo
