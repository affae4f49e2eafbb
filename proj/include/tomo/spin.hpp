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

#include <vector>

#include "tomo/frame.hpp"

namespace tomo {

struct BlochLabel {
  double theta = 0;  // [0, pi]
  double phi = 0;    // [0, 2 pi)
};

// Product rule: Gauss-Legendre in cos(theta) times uniform phi. The sin(theta)
// factor lives in the weights, which sum to 4 pi.
struct SphereQuadrature {
  std::vector<BlochLabel> nodes;
  std::vector<double> weights;
  int n_theta = 0;
  int n_phi = 0;
  // Largest total degree in the unit vector integrated exactly.
  int degree() const { return std::min(2 * n_theta - 1, n_phi - 1); }
};

enum class SpinMode { kernel_weighted, projector_weighted };

SphereQuadrature sphere_quadrature(int n_theta = 8, int n_phi = 16);

// (1/2)(I + n.sigma) from psi = (cos(theta/2), e^{i phi} sin(theta/2)).
RankOneProjector bloch_projector(const BlochLabel& l);
// (1/4pi)(I + 3 n.sigma)
Mat spin_kernel(const BlochLabel& l);

TomographicSet spin_set(const SphereQuadrature& q);

// kernel_weighted samples Tr(P A); projector_weighted samples Tr(K A).
TomogramTable spin_tomograms(const SphereQuadrature& q, const Mat& a,
                             SpinMode mode);
Mat spin_reconstruct(const SphereQuadrature& q, const TomogramTable& samples,
                     SpinMode mode);

}  // namespace tomo
