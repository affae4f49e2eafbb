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

#include "tomo/generators.hpp"

#include <cmath>
#include <random>
#include <string>

#include <Eigen/SVD>

namespace tomo {

namespace {

// Relative singular-value cutoff for the commutation system.
constexpr double kNullTol = 1e-8;

void check_square(const Mat& a, int dim, const char* what) {
  if (a.rows() != dim || a.cols() != dim) {
    throw DimensionError(std::string(what) + " has dim " +
                         std::to_string(a.rows()) + ", expected " +
                         std::to_string(dim));
  }
}

// Rows of (A^T (x) I - I (x) A) acting on column-stacked vec(X).
void append_commutator_rows(const Mat& a, Mat& sys, Eigen::Index row0) {
  const Eigen::Index d = a.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index p = 0; p < d; ++p) {
        sys(row0 + i * d + p, j * d + p) += a(j, i);
        sys(row0 + j * d + p, j * d + i) -= a(p, i);
      }
    }
  }
}

}  // namespace

void validate_family(const UnitaryFamily& fam, int dim, double tol) {
  if (!fam.labels.empty() && fam.labels.size() != fam.members.size()) {
    throw LabelMismatchError("family labels and members differ in length");
  }
  for (size_t k = 0; k < fam.members.size(); ++k) {
    check_square(fam.members[k], dim, "family member");
    if (!is_unitary(fam.members[k], tol)) {
      throw InvalidUnitaryError("family member " + std::to_string(k) +
                                " is not unitary");
    }
  }
}

FiducialOperator make_fiducial(const Mat& t0, double gap_tol) {
  if (t0.rows() != t0.cols() || t0.rows() == 0) {
    throw DimensionError("fiducial operator must be square");
  }
  if (!is_hermitian(t0)) throw DegenerateInputError("fiducial operator is not hermitian");
  HermitianEigen e = hermitian_eigen(t0);
  FiducialOperator f{t0, e.values, e.vectors, true};
  for (Eigen::Index i = 1; i < e.values.size(); ++i) {
    if (e.values(i) - e.values(i - 1) <= gap_tol) f.generic = false;
  }
  return f;
}

std::vector<Mat> isospectral_family(const FiducialOperator& t0,
                                    const UnitaryFamily& fam) {
  validate_family(fam, static_cast<int>(t0.t0.rows()));
  std::vector<Mat> out;
  out.reserve(fam.members.size());
  for (const auto& u : fam.members) out.push_back(u * t0.t0 * u.adjoint());
  return out;
}

GeneratedSet generated_projector_set(const FiducialOperator& t0,
                                     const UnitaryFamily& fam,
                                     EigenSelection sel) {
  const int dim = static_cast<int>(t0.t0.rows());
  validate_family(fam, dim);
  if (fam.members.empty()) throw DegenerateInputError("empty unitary family");
  if (sel == EigenSelection::all && !t0.generic) {
    throw DegenerateSpectrumError("fiducial operator has a degenerate spectrum");
  }
  const double gap_tol = 1e-8;
  std::vector<int> keep;
  for (int n = 0; n < dim; ++n) {
    bool simple = (n == 0 || t0.spectrum(n) - t0.spectrum(n - 1) > gap_tol) &&
                  (n == dim - 1 || t0.spectrum(n + 1) - t0.spectrum(n) > gap_tol);
    if (simple || sel == EigenSelection::all) keep.push_back(n);
  }
  std::vector<RankOneProjector> ps;
  std::vector<Label> labels;
  GeneratedSet g;
  for (size_t mu = 0; mu < fam.members.size(); ++mu) {
    for (int n : keep) {
      ps.emplace_back(fam.members[mu] * t0.eigenvectors.col(n));
      Label l = fam.labels.empty() ? Label{static_cast<double>(mu)} : fam.labels[mu];
      l.push_back(n);
      labels.push_back(std::move(l));
      g.member_index.push_back(static_cast<int>(mu));
      g.eigen_index.push_back(n);
    }
  }
  if (ps.empty()) throw DegenerateSpectrumError("no simple eigenvalues to use");
  g.set = TomographicSet(std::move(ps), std::move(labels));
  return g;
}

std::vector<Mat> joint_commutant(const Mat& t0, const UnitaryFamily& fam) {
  const int dim = static_cast<int>(t0.rows());
  check_square(t0, dim, "fiducial operator");
  for (const auto& u : fam.members) check_square(u, dim, "family member");
  const Eigen::Index d2 = static_cast<Eigen::Index>(dim) * dim;
  Mat sys = Mat::Zero(d2 * static_cast<Eigen::Index>(1 + fam.members.size()), d2);
  append_commutator_rows(t0, sys, 0);
  for (size_t k = 0; k < fam.members.size(); ++k) {
    append_commutator_rows(fam.members[k], sys, d2 * static_cast<Eigen::Index>(k + 1));
  }
  Eigen::BDCSVD<Mat> svd(sys, Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double top = s.size() ? s(0) : 0.0;
  std::vector<Mat> basis;
  for (Eigen::Index j = 0; j < d2; ++j) {
    if (s(j) <= std::max(top, 1.0) * kNullTol) {
      basis.push_back(unvectorize(svd.matrixV().col(j), dim));
    }
  }
  return basis;
}

bool commutant_intersection_trivial(const Mat& t0, const UnitaryFamily& fam) {
  return joint_commutant(t0, fam).size() == 1;
}

std::optional<InvariantWitness> common_invariant_subspace(
    const Mat& t0, const UnitaryFamily& fam) {
  std::vector<Mat> basis = joint_commutant(t0, fam);
  if (basis.size() <= 1) return std::nullopt;
  const int dim = static_cast<int>(t0.rows());
  // A generic Hermitian element of the commutant; its eigenprojectors commute
  // with T0 and every U because the commutant is closed under adjoints.
  std::mt19937 rng(20240611u);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Mat h = Mat::Zero(dim, dim);
  for (const auto& b : basis) {
    h += coef(rng) * (b + b.adjoint());
    h += coef(rng) * cplx(0, 1) * (b - b.adjoint());
  }
  HermitianEigen e = hermitian_eigen(h);
  const double spread = e.values(dim - 1) - e.values(0);
  const double gap_tol = 1e-6 * std::max(1.0, spread);
  int first_cluster = 1;
  while (first_cluster < dim &&
         e.values(first_cluster) - e.values(first_cluster - 1) <= gap_tol) {
    ++first_cluster;
  }
  if (first_cluster == dim) return std::nullopt;
  Mat vq = e.vectors.leftCols(first_cluster);
  InvariantWitness w;
  w.projector = vq * vq.adjoint();
  w.witness = e.vectors.col(0) * e.vectors.col(first_cluster).adjoint();
  return w;
}

std::vector<cplx> complex_tomogram(const TomographicSet& set, const Mat& w) {
  std::vector<cplx> out;
  out.reserve(set.size());
  for (const auto& p : set.projectors()) out.push_back(p.expectation(w));
  return out;
}

SqueezeParams default_squeeze_params(double mu, double nu) {
  return {std::hypot(mu, nu), 0.5 * std::atan2(nu, mu), 0.0};
}

Mat annihilation(int n_levels) {
  if (n_levels < 1) throw DegenerateInputError("need at least one level");
  Mat a = Mat::Zero(n_levels, n_levels);
  for (int n = 1; n < n_levels; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Mat parity(int n_levels) {
  Vec d(n_levels);
  for (int n = 0; n < n_levels; ++n) d(n) = (n % 2 == 0) ? 1.0 : -1.0;
  return d.asDiagonal();
}

Mat squeeze_operator(int n_levels, const SqueezeParams& p) {
  const Mat a = annihilation(n_levels);
  const Mat a2 = a * a;
  const Mat ad2 = a2.adjoint();
  const cplx ph = std::polar(1.0, -2 * p.theta);
  Mat h = (0.5 * p.r) * cplx(0, 1) * (ph * a2 - std::conj(ph) * ad2) +
          p.lambda * (a.adjoint() * a);
  return expi_hermitian(h);
}

SqueezeFamily squeeze_family_truncated(
    int n_levels, const std::vector<std::pair<double, double>>& grid) {
  if (n_levels < 8 || n_levels % 2 != 0) {
    throw DegenerateInputError("squeeze family needs even N >= 8, got " +
                               std::to_string(n_levels));
  }
  SqueezeFamily sf;
  sf.parity = parity(n_levels);
  for (const auto& [mu, nu] : grid) {
    Mat s = squeeze_operator(n_levels, default_squeeze_params(mu, nu));
    sf.parity_deviation =
        std::max(sf.parity_deviation, max_abs(s * sf.parity - sf.parity * s));
    sf.family.labels.push_back({mu, nu});
    sf.family.members.push_back(std::move(s));
  }
  sf.family.description = "truncated squeeze-and-rotate, N=" + std::to_string(n_levels);
  const Mat a = annihilation(n_levels);
  sf.fiducial = make_fiducial(a.adjoint() * a);
  GeneratedSet g = generated_projector_set(sf.fiducial, sf.family);
  sf.completeness_rank = completeness_rank(g.set.projectors());
  sf.witness = common_invariant_subspace(sf.fiducial.t0, sf.family);
  return sf;
}

Mat embedded_rotation(int n_levels, const Eigen::Vector3d& axis, double angle) {
  if (n_levels < 2) throw DegenerateInputError("rotation needs two levels");
  Eigen::Vector3d n = axis.normalized();
  Mat r = Mat::Identity(n_levels, n_levels);
  const cplx i(0, 1);
  const double c = std::cos(angle), s = std::sin(angle);
  // cos(angle) I - i sin(angle) n.sigma
  r(0, 0) = c - i * s * n(2);
  r(1, 1) = c + i * s * n(2);
  r(0, 1) = -i * s * cplx(n(0), -n(1));
  r(1, 0) = -i * s * cplx(n(0), n(1));
  return r;
}

Mat level_swap(int n_levels, int a, int b) {
  if (a < 1 || b < 1 || a > n_levels || b > n_levels) {
    throw DimensionError("swap index outside 1..N");
  }
  Mat p = Mat::Identity(n_levels, n_levels);
  if (a != b) {
    p(a - 1, a - 1) = 0;
    p(b - 1, b - 1) = 0;
    p(a - 1, b - 1) = 1;
    p(b - 1, a - 1) = 1;
  }
  return p;
}

PauliSwapGeneration pauli_swap_generation(int n_levels) {
  if (n_levels < 3) throw DegenerateInputError("Pauli+swap generation needs N >= 3");
  PauliSwapGeneration g;
  g.t0 = Mat::Zero(n_levels, n_levels);
  g.t0(0, 0) = 1;
  g.t0(1, 1) = -1;
  const double pi = std::acos(-1.0);
  g.rot_plus = embedded_rotation(n_levels, Eigen::Vector3d(1, 0, 1), pi / 2);
  g.rot_minus =
      embedded_rotation(n_levels, Eigen::Vector3d(0, 0, 1), pi / 4) * g.rot_plus;
  const Mat t_plus = g.rot_plus * g.t0 * g.rot_plus.adjoint();
  const Mat t_minus = g.rot_minus * g.t0 * g.rot_minus.adjoint();
  for (int n = 1; n <= n_levels; ++n) {
    for (int m = n + 1; m <= n_levels; ++m) {
      // Sends |1> to |n> and |2> to |m>.
      const Mat w = level_swap(n_levels, 1, n) * level_swap(n_levels, 2, m);
      g.pairs.emplace_back(n, m);
      g.plus.push_back(w * t_plus * w.adjoint());
      g.minus.push_back(w * t_minus * w.adjoint());
      const Mat members[3] = {w, w * g.rot_plus, w * g.rot_minus};
      for (int k = 0; k < 3; ++k) {
        g.family.labels.push_back({static_cast<double>(n), static_cast<double>(m),
                                   static_cast<double>(k)});
        g.family.members.push_back(members[k]);
      }
    }
  }
  g.family.description = "embedded Pauli rotations and level swaps";
  return g;
}

}  // namespace tomo
