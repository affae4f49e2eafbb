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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "tomo/continuous.hpp"

using namespace tomo;

namespace {

const double kPiT = std::acos(-1.0);

// Closed-form oscillator eigenfunctions for n <= 2.
double oscillator(int n, double q) {
  const double g = std::pow(kPiT, -0.25) * std::exp(-0.5 * q * q);
  if (n == 0) return g;
  if (n == 1) return std::sqrt(2.0) * q * g;
  return (2 * q * q - 1) / std::sqrt(2.0) * g;
}

Vec sampled(const PositionGrid& grid, int n) {
  Vec v(grid.points);
  for (int i = 0; i < grid.points; ++i) v(i) = oscillator(n, grid.q(i));
  return v;
}

}  // namespace

TEST(hermite, matches_closed_form) {
  for (int n = 0; n <= 2; ++n)
    for (double q : {-3.0, -0.7, 0.0, 1.3, 4.2}) EXPECT_NEAR(hermite_function(n, q), oscillator(n, q), 1e-14);
  PositionGrid grid;
  for (int n : {0, 5}) EXPECT_NEAR(hermite_state(grid, n).squaredNorm() * grid.step(), 1, 1e-12);
  // Level 20 leaks about 2.5e-7 past the default box.
  EXPECT_NEAR(hermite_state(grid, 20).squaredNorm() * grid.step(), 1, 1e-6);
}

TEST(symplectic_eigenfunction, momentum_case_and_modulus) {
  for (double x : {-1.5, 0.0, 2.0})
    for (double q : {-2.0, 0.3, 5.0})
      EXPECT_NEAR(std::abs(symplectic_eigenfunction(q, {x, 0, 1}) -
                           std::polar(1.0, x * q) / std::sqrt(2 * kPiT)),
                  0, 1e-15);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 100; ++k) {
    const double nu = u(rng);
    SymplecticLabel l{u(rng), u(rng), nu};
    EXPECT_NEAR(std::norm(symplectic_eigenfunction(u(rng), l)), 1 / (2 * kPiT * std::abs(nu)),
                1e-13);
  }
  EXPECT_THROW(symplectic_eigenfunction(0.2, {1, 1, 0}), UseDirectBranchError);
}

TEST(symplectic_eigenfunction, grid_delta_normalization) {
  PositionGrid grid;
  const double span = grid.points * grid.step();
  for (auto [mu, nu] : {std::pair{0.0, 1.0}, std::pair{0.7, -0.4}, std::pair{-1.2, 2.0}}) {
    auto overlap = [&](double x1, double x2) {
      cplx sum = 0;
      for (int i = 0; i < grid.points; ++i)
        sum += std::conj(symplectic_eigenfunction(grid.q(i), {x1, mu, nu})) *
               symplectic_eigenfunction(grid.q(i), {x2, mu, nu});
      return sum * grid.step();
    };
    // Peak height is span / (2 pi |nu|); the first node of the discrete sinc is at 2 pi |nu| / span.
    EXPECT_NEAR(std::abs(overlap(0.3, 0.3)), span / (2 * kPiT * std::abs(nu)), 1e-10);
    EXPECT_NEAR(std::abs(overlap(0.3, 0.3 + 2 * kPiT * std::abs(nu) / span)), 0, 1e-10);
    const double side = 0.3 + 10.5 * 2 * kPiT * std::abs(nu) / span;
    EXPECT_GT(std::abs(overlap(0.3, 0.3)), 10 * std::abs(overlap(0.3, side)));
  }
}

TEST(symplectic_tomogram, ground_state_gaussian) {
  PositionGrid grid;
  Vec psi = sampled(grid, 0);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int k = 0; k < 40; ++k) {
    double mu = u(rng), nu = u(rng), x = u(rng);
    if (std::abs(nu) < 0.05) nu = 0.5;
    const double s2 = mu * mu + nu * nu;
    EXPECT_NEAR(symplectic_tomogram(grid, psi, {x, mu, nu}),
                std::exp(-x * x / s2) / std::sqrt(kPiT * s2), 1e-8);
  }
}

TEST(symplectic_tomogram, first_excited_state_scaling) {
  PositionGrid grid;
  Vec psi = sampled(grid, 1);
  for (auto [mu, nu] : {std::pair{0.5, 1.0}, std::pair{-1.0, 0.3}, std::pair{0.0, 2.0}}) {
    const double s = std::hypot(mu, nu);
    for (double x : {-2.0, -0.4, 0.0, 1.1, 2.5}) {
      EXPECT_NEAR(symplectic_tomogram(grid, psi, {x, mu, nu}), std::pow(oscillator(1, x / s), 2) / s,
                  1e-8);
    }
  }
}

TEST(symplectic_tomogram, position_branch) {
  PositionGrid grid;
  Vec psi = sampled(grid, 2);
  TomogramRow row = symplectic_tomogram_row(grid, psi, 1, 0);
  for (int i = 0; i < grid.points; i += 37) EXPECT_NEAR(row.values[i], std::norm(psi(i)), 1e-14);
  // Between nodes the branch interpolates.
  EXPECT_NEAR(symplectic_tomogram(grid, psi, {0.123, 1, 0}), std::pow(oscillator(2, 0.123), 2), 1e-6);
  EXPECT_NEAR(symplectic_tomogram(grid, psi, {0.5, 2, 0}), std::pow(oscillator(2, 0.25), 2) / 2, 1e-6);
}

TEST(symplectic_tomogram, rows_integrate_to_one) {
  PositionGrid grid;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  Vec psi = Vec::Zero(grid.points);
  for (int n = 0; n < 6; ++n) psi += cplx(g(rng), g(rng)) * hermite_state(grid, n);
  psi /= std::sqrt(psi.squaredNorm() * grid.step());
  for (auto [mu, nu] : {std::pair{1.0, 0.0}, std::pair{0.3, 0.8}, std::pair{-1.0, -1.0}}) {
    TomogramRow row = symplectic_tomogram_row(grid, psi, mu, nu);
    double total = 0;
    for (double v : row.values) total += v * row.step;
    EXPECT_NEAR(total, 1, 1e-8);
  }
}

TEST(symplectic_tomogram, errors) {
  PositionGrid grid;
  Vec psi = 2.0 * sampled(grid, 0);
  EXPECT_THROW(symplectic_tomogram(grid, psi, {0, 1, 1}), DegenerateInputError);
  EXPECT_THROW(symplectic_tomogram(grid, sampled(grid, 0), {0, 0, 0}), DegenerateInputError);
  EXPECT_THROW(symplectic_tomogram(grid, Vec::Ones(3), {0, 1, 1}), DimensionError);
  PositionGrid bad{1, -1, 10};
  EXPECT_THROW(bad.validate(), ParameterError);
}

TEST(symplectic_identity, smoothed_kernel_matches_closed_form) {
  SymplecticIdentityReport r = symplectic_identity_check({{0.5, -0.5}, {1.0, 0.2}});
  EXPECT_LE(r.smoothed_max_deviation, 1e-3);
  EXPECT_GE(r.peak_ratio, 10);
  EXPECT_THROW(smoothed_kernel_numeric(0, 0, 1, 1), ParameterError);
}

TEST(symplectic_identity, under_resolved_grid_reports) {
  SmoothedKernelConfig cfg;
  cfg.x_points = 21;
  cfg.mu_points = 21;
  EXPECT_THROW(smoothed_kernel_numeric(0.4, -0.3, 0.5, -0.5, cfg), NumericalError);
}

TEST(symplectic_reconstruct, ground_state_fidelity) {
  PositionGrid grid;
  SymplecticReconstruction r = symplectic_reconstruct(grid, sampled(grid, 0));
  EXPECT_GE(r.fidelity, 0.99);
  EXPECT_LE(max_abs(r.rho - r.rho.adjoint()), 1e-8);
  EXPECT_THROW(symplectic_reconstruct(grid, sampled(grid, 0), 16, 4.0, 41), ParameterError);
}
