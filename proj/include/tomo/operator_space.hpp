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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tomo/errors.hpp"

namespace tomo {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Exact finite-dimensional identities vs. identities that only hold up to
// Fock-space truncation.
inline constexpr double kTolFinite = 1e-10;
inline constexpr double kTolTrunc = 1e-6;

struct OperatorFlags {
  bool hermitian = false;
  bool positive = false;
  bool trace_one = false;
};

// Dense square matrix plus optional assertions. The constructor checks the
// asserted flags and throws DimensionError / DegenerateInputError.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Mat m, OperatorFlags flags = {}, double tol = kTolFinite);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Mat& matrix() const { return m_; }
  const OperatorFlags& flags() const { return flags_; }

 private:
  Mat m_;
  OperatorFlags flags_;
};

// Returns psi / |psi|; zero vector -> DegenerateInputError.
Vec normalized(const Vec& psi);

class RankOneProjector {
 public:
  explicit RankOneProjector(const Vec& psi);

  int dim() const { return static_cast<int>(psi_.size()); }
  // Unit-norm generating vector.
  const Vec& vector() const { return psi_; }
  Mat matrix() const { return psi_ * psi_.adjoint(); }
  // Tr(P A) = <psi|A|psi>, without forming P.
  cplx expectation(const Mat& a) const;

 private:
  Vec psi_;
};

struct NormTriple {
  double operator_norm = 0;
  double hs_norm = 0;
  double trace_norm = 0;
};

// Tr(A^dagger B).
cplx hs_inner(const Mat& a, const Mat& b);
NormTriple norms(const Mat& a);
RankOneProjector projector_from_vector(const Vec& psi);

// Column-stacked vec(A), length dim^2.
Vec vectorize(const Mat& a);
Mat unvectorize(const Eigen::Ref<const Vec>& v, int dim);

double max_abs(const Mat& a);
bool is_hermitian(const Mat& a, double tol = kTolFinite);
bool is_unitary(const Mat& u, double tol = kTolFinite);

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  Mat vectors;             // columns, largest component real positive
};
HermitianEigen hermitian_eigen(const Mat& h);

// exp(-i H) for Hermitian H through its eigendecomposition.
Mat expi_hermitian(const Mat& h);

struct RankReport {
  int rank = 0;
  // Ratio of the largest to the smallest of the leading min(count, dim^2)
  // Gram eigenvalues; infinity when the set does not span.
  double condition_number = 0;
};

// Numerical rank of the Gram matrix G_ij = <P_i|P_j> for a list of projectors
// (or any operators) of common dimension.
RankReport gram_rank(const std::vector<Mat>& ops);
RankReport gram_rank(const std::vector<RankOneProjector>& projectors);
int completeness_rank(const std::vector<RankOneProjector>& projectors);

}  // namespace tomo
