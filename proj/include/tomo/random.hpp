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

#include <random>

#include "tomo/operator_space.hpp"

namespace tomo {

// Complex Gaussian entries.
inline Mat random_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(dim, dim);
  for (Eigen::Index k = 0; k < m.size(); ++k) m(k) = cplx(g(rng), g(rng));
  return m;
}

inline Mat random_hermitian(int dim, std::mt19937_64& rng) {
  Mat m = random_matrix(dim, rng);
  return 0.5 * (m + m.adjoint());
}

inline Vec random_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(dim);
  for (int k = 0; k < dim; ++k) v(k) = cplx(g(rng), g(rng));
  return v;
}

// Density operator on `levels` levels, zero-padded to dim.
inline Mat random_density(int levels, int dim, std::mt19937_64& rng) {
  Mat g = random_matrix(levels, rng);
  Mat r = g * g.adjoint();
  r /= r.trace().real();
  Mat out = Mat::Zero(dim, dim);
  out.topLeftCorner(levels, levels) = r;
  return out;
}

}  // namespace tomo
