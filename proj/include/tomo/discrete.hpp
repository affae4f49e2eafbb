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

#include <array>
#include <vector>

#include "tomo/frame.hpp"

namespace tomo {

// All indices here are 1-based, |1>, ..., |N>.

class MatrixUnits {
 public:
  explicit MatrixUnits(int n_levels);
  int size() const { return n_; }
  // |n><m|
  Mat unit(int n, int m) const;
  // (1/2)(E_nm + E_mn)
  Mat plus(int n, int m) const;
  // (i/2)(E_nm - E_mn); antisymmetric in (n, m), so minus(2,1) = +sigma_2/2.
  Mat minus(int n, int m) const;

 private:
  void check(int n, int m) const;
  int n_;
};

MatrixUnits matrix_units(int n_levels);

enum class Branch { diagonal = 0, plus = 1, minus = -1 };

struct PairLabel {
  int n = 1;
  int m = 1;
  Branch branch = Branch::diagonal;
  int eig = 0;  // +1 / -1, 0 on the diagonal

  // Storage form with n < m. A minus-branch label written with n > m names
  // the opposite eigenvector of the canonical pair.
  PairLabel canonical() const;
  Label to_label() const;
  static PairLabel from_label(const Label& l);
  bool operator==(const PairLabel& o) const = default;
};

struct PairProjectors {
  // (+,+), (+,-), (-,+), (-,-)
  std::array<Vec, 4> vectors;
  std::array<RankOneProjector, 4> projectors;
};

// psi^{+,+-} = (|n> +- |m>)/sqrt2, psi^{-,+-} = (|m> +- i|n>)/sqrt2.
PairProjectors pair_projectors(int n, int m, int n_levels);

inline constexpr int kDefaultLevels = 8;
inline constexpr int kMaxLevels = 64;

class DiscreteSetBundle {
 public:
  explicit DiscreteSetBundle(int n_levels = kDefaultLevels);

  int levels() const { return n_; }
  const MatrixUnits& units() const { return units_; }
  // P_11..P_NN, then per n<m: (+,+), (+,-), (-,+), (-,-).
  const std::vector<PairLabel>& pair_labels() const { return labels_; }
  const std::vector<RankOneProjector>& projectors() const { return projectors_; }
  TomographicSet as_set() const;
  // Position of a label (any index order) in the bundle, or -1.
  int index_of(const PairLabel& l) const;

 private:
  int n_;
  MatrixUnits units_;
  std::vector<PairLabel> labels_;
  std::vector<RankOneProjector> projectors_;
};

// Closed-form reconstruction; labels may come in any order.
Mat reconstruct_discrete(const DiscreteSetBundle& bundle,
                         const TomogramTable& table);
Mat reconstruct_discrete(const DiscreteSetBundle& bundle,
                         const SplitTomogram& split);

struct ResolutionReport {
  int levels = 0;
  double max_deviation = 0;
};

// Applies sum_n |P_nn><P_nn| + sum_{n<m} |K><P| to every matrix unit.
ResolutionReport resolution_of_unity_discrete(int n_levels,
                                              bool include_pairs = true);

// {P_nn} plus the (+,+) and (-,+) members of every pair.
TomographicSet minimal_subset(const DiscreteSetBundle& bundle);

}  // namespace tomo
