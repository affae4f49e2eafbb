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
#include <random>

#include "gtest/gtest.h"
#include "tomo/random.hpp"

using namespace tomo;

namespace {

const double kPiT = std::acos(-1.0);

Mat sigma(int k) {
  Mat s(2, 2);
  if (k == 1) s << 0, 1, 1, 0;
  if (k == 2) s << 0, cplx(0, -1), cplx(0, 1), 0;
  if (k == 3) s << 1, 0, 0, -1;
  return s;
}

// Independent closed form (1/2)(I + n.sigma).
Mat bloch_oracle(double theta, double phi) {
  const double x = std::sin(theta) * std::cos(phi), y = std::sin(theta) * std::sin(phi),
               z = std::cos(theta);
  return 0.5 * (Mat::Identity(2, 2) + x * sigma(1) + y * sigma(2) + z * sigma(3));
}

}  // namespace

TEST(bloch_projector, examples) {
  Mat up(2, 2), down(2, 2), plus_x(2, 2);
  up << 1, 0, 0, 0;
  down << 0, 0, 0, 1;
  plus_x << 0.5, 0.5, 0.5, 0.5;
  EXPECT_LE(max_abs(bloch_projector({0, 0}).matrix() - up), 1e-15);
  EXPECT_LE(max_abs(bloch_projector({kPiT, 0}).matrix() - down), 1e-15);
  EXPECT_LE(max_abs(bloch_projector({kPiT / 2, 0}).matrix() - plus_x), 1e-15);
}

TEST(bloch_projector, matches_bloch_vector_form) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> th(0, kPiT), ph(0, 2 * kPiT);
  for (int k = 0; k < 50; ++k) {
    const double t = th(rng), p = ph(rng);
    EXPECT_LE(max_abs(bloch_projector({t, p}).matrix() - bloch_oracle(t, p)), 1e-14);
  }
}

TEST(bloch_projector, out_of_range) {
  EXPECT_THROW(bloch_projector({-0.1, 0}), DegenerateInputError);
  EXPECT_THROW(bloch_projector({kPiT + 0.1, 0}), DegenerateInputError);
  EXPECT_THROW(bloch_projector({1, 2 * kPiT}), DegenerateInputError);
  EXPECT_THROW(bloch_projector({1, -0.5}), DegenerateInputError);
}

TEST(spin_kernel, examples_and_trace) {
  Mat north(2, 2);
  north << 1, 0, 0, -0.5;
  EXPECT_LE(max_abs(spin_kernel({0, 0}) - north / kPiT), 1e-15);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(0, kPiT), ph(0, 2 * kPiT);
  for (int k = 0; k < 20; ++k) {
    Mat kern = spin_kernel({th(rng), ph(rng)});
    EXPECT_NEAR(std::abs(kern.trace() - cplx(1 / (2 * kPiT))), 0, 1e-15);
    EXPECT_TRUE(is_hermitian(kern));
  }
}

TEST(spin_kernel, lipschitz_in_angles) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.1, kPiT - 0.1), ph(0.1, 2 * kPiT - 0.1);
  for (int k = 0; k < 50; ++k) {
    const double t = th(rng), p = ph(rng), h = 1e-4;
    const double d = max_abs(spin_kernel({t + h, p + h}) - spin_kernel({t, p}));
    // |d n| <= 2h and each entry of n.sigma changes by at most |dn|.
    EXPECT_LE(d, 3.0 / (4 * kPiT) * 2 * h * 1.0001);
  }
}

TEST(sphere_quadrature, weights_and_degree) {
  for (int nt : {2, 3, 8}) {
    for (int np : {3, 4, 16}) {
      SphereQuadrature q = sphere_quadrature(nt, np);
      double total = 0;
      for (double w : q.weights) total += w;
      EXPECT_NEAR(total, 4 * kPiT, 1e-13);
      EXPECT_EQ(q.nodes.size(), size_t(nt * np));
    }
  }
  EXPECT_THROW(sphere_quadrature(0, 4), ParameterError);
}

TEST(spin_tomograms, identity_and_sigma3_both_modes) {
  SphereQuadrature q = sphere_quadrature();
  TomogramTable ti = spin_tomograms(q, Mat::Identity(2, 2), SpinMode::kernel_weighted);
  for (double v : ti.values) EXPECT_NEAR(v, 1, 1e-15);
  TomogramTable tz = spin_tomograms(q, sigma(3), SpinMode::kernel_weighted);
  for (size_t k = 0; k < q.nodes.size(); ++k)
    EXPECT_NEAR(tz.values[k], std::cos(q.nodes[k].theta), 1e-15);
  for (SpinMode mode : {SpinMode::kernel_weighted, SpinMode::projector_weighted}) {
    for (int s = 1; s <= 3; ++s) {
      Mat a = sigma(s);
      EXPECT_LE(max_abs(spin_reconstruct(q, spin_tomograms(q, a, mode), mode) - a), 1e-13);
    }
    EXPECT_LE(max_abs(spin_reconstruct(q, spin_tomograms(q, Mat::Identity(2, 2), mode), mode) -
                      Mat::Identity(2, 2)),
              1e-13);
  }
}

TEST(spin_reconstruct, random_hermitian_both_modes) {
  std::mt19937_64 rng(4);
  SphereQuadrature q = sphere_quadrature();
  for (int k = 0; k < 10; ++k) {
    Mat a = random_hermitian(2, rng);
    for (SpinMode mode : {SpinMode::kernel_weighted, SpinMode::projector_weighted}) {
      EXPECT_LE(max_abs(spin_reconstruct(q, spin_tomograms(q, a, mode), mode) - a), 1e-12);
    }
  }
}

TEST(spin_reconstruct, smallest_exact_grid) {
  std::mt19937_64 rng(5);
  Mat a = random_hermitian(2, rng);
  for (auto [nt, np] : {std::pair{2, 3}, std::pair{3, 4}}) {
    SphereQuadrature q = sphere_quadrature(nt, np);
    for (SpinMode mode : {SpinMode::kernel_weighted, SpinMode::projector_weighted}) {
      EXPECT_LE(max_abs(spin_reconstruct(q, spin_tomograms(q, a, mode), mode) - a), 1e-12);
    }
  }
  // One azimuth node per ring cannot resolve the equatorial components.
  SphereQuadrature coarse = sphere_quadrature(2, 1);
  Mat x = sigma(1);
  EXPECT_GT(max_abs(spin_reconstruct(coarse,
                                     spin_tomograms(coarse, x, SpinMode::kernel_weighted),
                                     SpinMode::kernel_weighted) -
                    x),
            0.1);
}

TEST(spin_kernel, not_biorthogonal_to_projectors) {
  // Kernel and projector at antipodes overlap by (1/4pi)(1 - 3) != 0.
  const double v = hs_inner(bloch_projector({kPiT, 0}).matrix(), spin_kernel({0, 0})).real();
  EXPECT_NEAR(v, -1 / (2 * kPiT), 1e-15);
  EXPECT_NE(hs_inner(bloch_projector({0, 0}).matrix(), spin_kernel({0, 0})).real(), 1.0);
}

TEST(spin_tomograms, errors) {
  SphereQuadrature q = sphere_quadrature(2, 3);
  EXPECT_THROW(spin_tomograms(q, Mat::Identity(3, 3), SpinMode::kernel_weighted), DimensionError);
  TomogramTable t = spin_tomograms(q, sigma(1), SpinMode::kernel_weighted);
  t.values.pop_back();
  t.labels.pop_back();
  EXPECT_THROW(spin_reconstruct(q, t, SpinMode::kernel_weighted), LabelMismatchError);
}
