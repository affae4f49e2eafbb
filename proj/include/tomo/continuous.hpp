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

// ---- position representation and symplectic tomograms

struct PositionGrid {
  double q_min = -8.0;
  double q_max = 8.0;
  int points = 512;

  double step() const { return (q_max - q_min) / (points - 1); }
  double q(int i) const { return q_min + i * step(); }
  void validate() const;
};

struct SymplecticLabel {
  double X = 0;
  double mu = 0;
  double nu = 0;
};

// Harmonic-oscillator eigenfunction psi_n(q) (Hermite function).
double hermite_function(int n, double q);
Vec hermite_state(const PositionGrid& grid, int n);

// <q|X mu nu> for nu != 0; UseDirectBranchError at nu = 0.
cplx symplectic_eigenfunction(double q, const SymplecticLabel& l);

// |sum_q conj(<q|X mu nu>) psi(q) dq|^2, or |psi(X/mu)|^2/|mu| at nu = 0.
// psi must be normalized on the grid (DegenerateInputError otherwise).
double symplectic_tomogram(const PositionGrid& grid, const Vec& psi,
                           const SymplecticLabel& l);

// Tomogram on X = s * q_i, s = |(mu, nu)|, with the matching step s * dq.
// The X-sum of values times step is the normalization of the marginal.
struct TomogramRow {
  std::vector<double> x;
  std::vector<double> values;
  double step = 0;
};
TomogramRow symplectic_tomogram_row(const PositionGrid& grid, const Vec& psi,
                                    double mu, double nu);

// Gaussian-regulated kernel composition
//   int dX/2pi dmu w_L(X) w_M(mu) <y|e^{i(X - mu Q - nu P)}|y'> <q'|X><X|q>
// with nu fixed to y - y' by the translation delta.
struct SmoothedKernelConfig {
  double window_x = 4.0;   // L
  double window_mu = 4.0;  // M
  int x_points = 801;
  int mu_points = 801;
  double box_sigmas = 9.0;  // integrate over +-box_sigmas windows
};
cplx smoothed_kernel_numeric(double q, double q2, double y, double y2,
                             const SmoothedKernelConfig& cfg = {});
double smoothed_kernel_analytic(double q, double q2, double y, double y2,
                                const SmoothedKernelConfig& cfg = {});

struct SymplecticIdentityReport {
  double smoothed_max_deviation = 0;  // numeric vs analytic, all samples
  double peak_ratio = 0;              // peak over largest displaced value
};
// Samples (q, q') around (y, y') pairs; NumericalError when the quadrature
// cannot resolve the window oscillations.
SymplecticIdentityReport symplectic_identity_check(
    const std::vector<std::pair<double, double>>& ys,
    const SmoothedKernelConfig& cfg = {});

struct SymplecticReconstruction {
  std::vector<double> y;
  Mat rho;             // rho(y_i, y_j)
  double fidelity = 0;  // sum psi0 rho psi0 dy^2
};
// rho(y, y') = (1/2pi) int dmu chi(mu, y - y') e^{-i mu (y + y')/2},
// chi(mu, nu) = int dX T(X, mu, nu) e^{iX}; the fidelity is against psi_ref.
SymplecticReconstruction symplectic_reconstruct(
    const PositionGrid& grid, const Vec& psi, int y_points = 16,
    double y_max = 4.0, int mu_points = 40, double mu_max = 8.0,
    int ref_level = 0);

// ---- truncated Fock space

struct FockSpace {
  explicit FockSpace(int n_levels);
  int levels = 0;
  Mat a;
  Mat adag;
  Mat number;
};

// |alpha|^2 + n <= N/2, TruncationError otherwise.
void check_guard(const FockSpace& fock, cplx alpha, int n = 0);

Mat displacement(cplx alpha, const FockSpace& fock);
Vec coherent_state(cplx alpha, const FockSpace& fock);
double husimi_q(const Mat& rho, cplx alpha, const FockSpace& fock);

// ---- photon-number tomography
//
// Tomograms and kernels are evaluated from exact displaced number-state
// amplitudes, so a state on N levels can be probed with any n and alpha.

// <j|D(alpha)|n> for j < rows, n < cols.
Mat displaced_number_amplitudes(cplx alpha, int rows, int cols);

double photon_tomogram(const Mat& rho, int n, cplx alpha);
// T(n, alpha) for n < n_max.
Eigen::VectorXd photon_tomograms(const Mat& rho, cplx alpha, int n_max);

// <j| D(alpha) t^{a^dagger a} D(alpha)^dagger |k> on the lowest `levels`.
Mat displaced_power(cplx alpha, double t, int levels);

// (4/(1-s^2)) ((s+1)/(s-1))^n D(alpha) ((s-1)/(s+1))^{a^dagger a} D(alpha)^dagger
// on the lowest `levels`; ParameterError outside -1 < s < 1.
Mat photon_kernel(int n, cplx alpha, double s, int levels);

struct AlphaGrid {
  std::vector<cplx> nodes;
  std::vector<double> weights;  // r dr dtheta folded in
  double radius = 0;
  int n_radial = 0;
  int n_angular = 0;
};
AlphaGrid polar_alpha_grid(double radius, int n_radial, int n_angular);

// Number-state range that keeps the tail of every sampled tomogram negligible.
int default_photon_nmax(const AlphaGrid& grid, int levels);

// Labels (n, Re alpha, Im alpha) node by node, n fastest.
TomogramTable photon_tomogram_table(const Mat& rho, const AlphaGrid& grid,
                                    int n_max);

struct PhotonReconstruction {
  Mat rho;
  int dropped_nodes = 0;  // nodes whose series cannot be summed in double
  int n_max = 0;
};
PhotonReconstruction photon_reconstruct(const TomogramTable& table, double s,
                                        const AlphaGrid& grid, int levels);

struct PhotonIdentityReport {
  double max_deviation = 0;
  int dropped_nodes = 0;
};
// Applies sum_n int d^2alpha/pi K(n, alpha) Tr(|n alpha><n alpha| .) to the
// matrix units of the lowest n_test levels.
PhotonIdentityReport photon_identity_check(double s, int n_test,
                                           const AlphaGrid& grid, int n_max,
                                           bool vacuum_only = false);

}  // namespace tomo
