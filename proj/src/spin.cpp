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

#include "tomo/spin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tomo/quadrature.hpp"

namespace tomo {

namespace {

constexpr double kPi = std::numbers::pi;

void check_range(const BlochLabel& l) {
  if (!(l.theta >= 0 && l.theta <= kPi && l.phi >= 0 && l.phi < 2 * kPi)) {
    throw DegenerateInputError("Bloch angles out of range: theta=" +
                               std::to_string(l.theta) +
                               " phi=" + std::to_string(l.phi));
  }
}

Label to_label(const BlochLabel& l) { return {l.theta, l.phi}; }

}  // namespace

SphereQuadrature sphere_quadrature(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) {
    throw ParameterError("sphere quadrature needs positive node counts");
  }
  Quadrature1D gl = gauss_legendre(n_theta, -1.0, 1.0);
  SphereQuadrature q;
  q.n_theta = n_theta;
  q.n_phi = n_phi;
  for (int i = 0; i < n_theta; ++i) {
    double theta = std::acos(gl.nodes[i]);
    for (int k = 0; k < n_phi; ++k) {
      q.nodes.push_back({theta, 2 * kPi * k / n_phi});
      q.weights.push_back(gl.weights[i] * 2 * kPi / n_phi);
    }
  }
  return q;
}

RankOneProjector bloch_projector(const BlochLabel& l) {
  check_range(l);
  Vec psi(2);
  psi << std::cos(l.theta / 2),
      std::polar(1.0, l.phi) * std::sin(l.theta / 2);
  return RankOneProjector(psi);
}

Mat spin_kernel(const BlochLabel& l) {
  check_range(l);
  const double c = std::cos(l.theta), s = std::sin(l.theta);
  Mat k(2, 2);
  k << 1 + 3 * c, 3.0 * std::polar(s, -l.phi),
       3.0 * std::polar(s, l.phi), 1 - 3 * c;
  return k / (4 * kPi);
}

TomographicSet spin_set(const SphereQuadrature& q) {
  std::vector<RankOneProjector> ps;
  std::vector<Label> labels;
  ps.reserve(q.nodes.size());
  for (const auto& n : q.nodes) {
    ps.push_back(bloch_projector(n));
    labels.push_back(to_label(n));
  }
  return TomographicSet(std::move(ps), std::move(labels), q.weights);
}

TomogramTable spin_tomograms(const SphereQuadrature& q, const Mat& a,
                             SpinMode mode) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("spin operator must be 2x2");
  const double scale = std::max(1.0, max_abs(a));
  TomogramTable t;
  t.dim = 2;
  t.metadata["grid"] = {{"kind", "sphere"},
                        {"n_theta", q.n_theta},
                        {"n_phi", q.n_phi},
                        {"mode", mode == SpinMode::kernel_weighted
                                     ? "kernel_weighted"
                                     : "projector_weighted"}};
  for (const auto& n : q.nodes) {
    cplx v = mode == SpinMode::kernel_weighted
                 ? bloch_projector(n).expectation(a)
                 : (spin_kernel(n) * a).trace();
    if (std::abs(v.imag()) > kTolFinite * scale) {
      throw NumericalError("spin tomogram not real; operator is not hermitian");
    }
    t.labels.push_back(to_label(n));
    t.values.push_back(v.real());
  }
  return t;
}

Mat spin_reconstruct(const SphereQuadrature& q, const TomogramTable& samples,
                     SpinMode mode) {
  if (samples.values.size() != q.nodes.size() ||
      samples.labels.size() != q.nodes.size()) {
    throw LabelMismatchError("sample table does not match the quadrature grid");
  }
  Mat a = Mat::Zero(2, 2);
  for (size_t i = 0; i < q.nodes.size(); ++i) {
    const Label& l = samples.labels[i];
    if (l.size() != 2 || std::abs(l[0] - q.nodes[i].theta) > 1e-12 ||
        std::abs(l[1] - q.nodes[i].phi) > 1e-12) {
      throw LabelMismatchError("sample " + std::to_string(i) +
                               " is not on the quadrature node");
    }
    Mat op = mode == SpinMode::kernel_weighted
                 ? spin_kernel(q.nodes[i])
                 : bloch_projector(q.nodes[i]).matrix();
    a += (q.weights[i] * samples.values[i]) * op;
  }
  return a;
}

}  // namespace tomo
