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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tomo/frame.hpp"

namespace tomo {

struct UnitaryFamily {
  std::vector<Label> labels;
  std::vector<Mat> members;
  std::string description;
};

// Checks U^dagger U = I for every member; InvalidUnitaryError otherwise.
void validate_family(const UnitaryFamily& fam, int dim, double tol = kTolFinite);

struct FiducialOperator {
  Mat t0;
  Eigen::VectorXd spectrum;  // ascending
  Mat eigenvectors;
  bool generic = false;      // all eigenvalue gaps above gap_tol
};

FiducialOperator make_fiducial(const Mat& t0, double gap_tol = 1e-8);

std::vector<Mat> isospectral_family(const FiducialOperator& t0,
                                    const UnitaryFamily& fam);

struct GeneratedSet {
  TomographicSet set;
  std::vector<int> member_index;  // mu
  std::vector<int> eigen_index;   // n
};

enum class EigenSelection {
  all,          // simple spectrum required, DegenerateSpectrumError otherwise
  simple_only,  // keep only eigenvectors of non-degenerate eigenvalues
};

// P_{mu,n} = U_mu P_n U_mu^dagger; labels are (mu label..., n).
GeneratedSet generated_projector_set(const FiducialOperator& t0,
                                     const UnitaryFamily& fam,
                                     EigenSelection sel = EigenSelection::all);

// Basis of {X : [X, T0] = 0 and [X, U] = 0 for all U in fam}, orthonormal in
// the trace inner product.
std::vector<Mat> joint_commutant(const Mat& t0, const UnitaryFamily& fam);
bool commutant_intersection_trivial(const Mat& t0, const UnitaryFamily& fam);

struct InvariantWitness {
  Mat projector;  // Q, commutes with T0 and every U
  Mat witness;    // |phi1><phi2|, phi1 in ran Q, phi2 in ker Q
};

std::optional<InvariantWitness> common_invariant_subspace(
    const Mat& t0, const UnitaryFamily& fam);

// Tr(P w) for every projector of the set, complex.
std::vector<cplx> complex_tomogram(const TomographicSet& set, const Mat& w);

// ---- truncated Fock-space squeeze family

struct SqueezeParams {
  double r = 0;
  double theta = 0;
  double lambda = 0;
};

// r = |(mu, nu)|, theta = atan2(nu, mu)/2, lambda = 0.
SqueezeParams default_squeeze_params(double mu, double nu);

// Annihilation operator on the lowest n levels.
Mat annihilation(int n_levels);
// (-1)^{a^dagger a}
Mat parity(int n_levels);

// exp(-i H) with H = (r/2) i (e^{-2i theta} a^2 - e^{2i theta} a^dagger^2)
//                    + lambda a^dagger a.
Mat squeeze_operator(int n_levels, const SqueezeParams& p);

struct SqueezeFamily {
  UnitaryFamily family;
  FiducialOperator fiducial;  // a^dagger a
  Mat parity;
  double parity_deviation = 0;  // max |[S, parity]|
  int completeness_rank = 0;
  std::optional<InvariantWitness> witness;
};

SqueezeFamily squeeze_family_truncated(
    int n_levels, const std::vector<std::pair<double, double>>& grid);

// ---- Pauli rotations and index swaps

// exp(-i angle n.sigma) on levels (1, 2), identity elsewhere.
Mat embedded_rotation(int n_levels, const Eigen::Vector3d& axis, double angle);
// Permutation exchanging levels a and b (1-based).
Mat level_swap(int n_levels, int a, int b);

struct PauliSwapGeneration {
  Mat t0;                                 // diag(1, -1, 0, ...)
  Mat rot_plus;                           // sends sigma_3 block to sigma_1
  Mat rot_minus;                          // sends sigma_3 block to sigma_2
  std::vector<std::pair<int, int>> pairs;  // (n, m), n < m
  std::vector<Mat> plus;                  // equals 2 E+_nm
  std::vector<Mat> minus;                 // equals 2 (i/2)(E_mn - E_nm)
  UnitaryFamily family;                   // swaps, swaps*rot_plus, swaps*rot_minus
};

PauliSwapGeneration pauli_swap_generation(int n_levels);

}  // namespace tomo
