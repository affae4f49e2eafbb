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
#include <vector>

#include "json.hpp"
#include "tomo/operator_space.hpp"

namespace tomo {

// Discrete indices or continuous parameters, stored as a numeric tuple.
using Label = std::vector<double>;

class TomographicSet {
 public:
  TomographicSet() = default;
  // weights: quadrature measure, empty for discrete sets (all ones).
  TomographicSet(std::vector<RankOneProjector> projectors,
                 std::vector<Label> labels, std::vector<double> weights = {});

  int dim() const { return dim_; }
  size_t size() const { return projectors_.size(); }
  const std::vector<RankOneProjector>& projectors() const { return projectors_; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<double>& weights() const { return weights_; }
  bool weighted() const { return !weights_.empty(); }
  double weight(size_t i) const { return weights_.empty() ? 1.0 : weights_[i]; }
  // Fingerprint of (dim, labels); tables carry it back to reconstruct().
  const std::string& id() const { return id_; }

  // dim^2 x size matrix whose columns are vec(P_k).
  Mat frame_matrix() const;

 private:
  int dim_ = 0;
  std::vector<RankOneProjector> projectors_;
  std::vector<Label> labels_;
  std::vector<double> weights_;
  std::string id_;
};

struct DualFrame {
  std::vector<Mat> duals;
  std::vector<Label> labels;
  std::vector<double> weights;
  std::string source_id;
  int dim = 0;
  bool minimal = false;
  // Only filled for minimal sets: |V_j> = sum_k gamma_jk |P_k>.
  Mat gamma;
  double condition_number = 0;
  // Non-empty when the Gram matrix is badly conditioned.
  std::string warning;
};

struct TomogramTable {
  std::vector<Label> labels;
  std::vector<double> values;
  std::string set_id;
  int dim = 0;
  nlohmann::json metadata = nlohmann::json::object();
};

// Tomograms of a general operator B = H1 - i H2 with H1, H2 Hermitian.
struct SplitTomogram {
  TomogramTable hermitian_part;
  TomogramTable antihermitian_part;
};

struct Orthonormalization {
  std::vector<Mat> basis;  // V_j
  Mat gamma;
};

inline constexpr double kConditionWarning = 1e8;

Orthonormalization orthonormalize(const TomographicSet& set);
DualFrame dual_frame(const TomographicSet& set);

TomogramTable tomogram(const TomographicSet& set, const Mat& a,
                       double tol = kTolFinite);
SplitTomogram split_tomogram(const TomographicSet& set, const Mat& b);

Mat reconstruct(const DualFrame& frame, const TomogramTable& table);
Mat reconstruct(const DualFrame& frame, const SplitTomogram& split);

// Hermitian parts used by the split: B = H1 - i H2.
Mat hermitian_part(const Mat& b);
Mat antihermitian_part(const Mat& b);

}  // namespace tomo
