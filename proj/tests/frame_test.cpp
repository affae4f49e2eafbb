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

#include "tomo/frame.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "tomo/discrete.hpp"
#include "tomo/random.hpp"
#include "tomo/spin.hpp"

using namespace tomo;

namespace {

// Minimal set of dim^2 random projectors, resampled until it spans.
TomographicSet random_minimal_set(int dim, std::mt19937_64& rng) {
  for (;;) {
    std::vector<RankOneProjector> ps;
    std::vector<Label> ls;
    for (int k = 0; k < dim * dim; ++k) {
      ps.emplace_back(random_vector(dim, rng));
      ls.push_back({double(k)});
    }
    if (completeness_rank(ps) == dim * dim) return TomographicSet(ps, ls);
  }
}

TomographicSet tetrahedron() {
  const double t = std::acos(-1.0 / 3.0), pi = std::acos(-1.0);
  std::vector<RankOneProjector> ps = {bloch_projector({0, 0}), bloch_projector({t, 0}),
                                      bloch_projector({t, 2 * pi / 3}),
                                      bloch_projector({t, 4 * pi / 3})};
  return TomographicSet(ps, {{0}, {1}, {2}, {3}});
}

// Oracle duals: K = M G^{-1} with G = M^H M, columns vec(K_l).
std::vector<Mat> gram_inverse_duals(const TomographicSet& set) {
  Mat m = set.frame_matrix();
  Mat k = m * (m.adjoint() * m).inverse();
  std::vector<Mat> out;
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.push_back(unvectorize(k.col(c), set.dim()));
  return out;
}

}  // namespace

TEST(orthonormalize, basis_is_orthonormal_and_matches_gamma) {
  std::mt19937_64 rng(2);
  for (int dim = 2; dim <= 4; ++dim) {
    TomographicSet set = random_minimal_set(dim, rng);
    Orthonormalization on = orthonormalize(set);
    const int d2 = dim * dim;
    for (int i = 0; i < d2; ++i) {
      for (int j = 0; j < d2; ++j) {
        EXPECT_NEAR(std::abs(hs_inner(on.basis[i], on.basis[j]) - cplx(i == j ? 1 : 0)), 0,
                    1e-10);
      }
      Mat v = Mat::Zero(dim, dim);
      for (int k = 0; k < d2; ++k) v += on.gamma(i, k) * set.projectors()[k].matrix();
      EXPECT_LE(max_abs(v - on.basis[i]), 1e-10);
    }
  }
}

TEST(orthonormalize, tetrahedron_gamma_invertible) {
  TomographicSet set = tetrahedron();
  Mat m = set.frame_matrix();
  EXPECT_GT(std::abs((m.adjoint() * m).determinant()), 1e-6);
  Orthonormalization on = orthonormalize(set);
  EXPECT_GT(std::abs(on.gamma.determinant()), 1e-6);
}

TEST(orthonormalize, errors) {
  DiscreteSetBundle b(2);
  EXPECT_THROW(orthonormalize(b.as_set()), NotMinimalError);
  std::vector<RankOneProjector> diag;
  for (int k = 0; k < 2; ++k) diag.push_back(b.projectors()[k]);
  EXPECT_THROW(orthonormalize(TomographicSet(diag, {{0}, {1}})), IncompleteSetError);
}

TEST(dual_frame, biorthogonal_and_matches_gram_oracle) {
  std::mt19937_64 rng(3);
  for (int dim = 2; dim <= 4; ++dim) {
    TomographicSet set = random_minimal_set(dim, rng);
    DualFrame f = dual_frame(set);
    EXPECT_TRUE(f.minimal);
    std::vector<Mat> oracle = gram_inverse_duals(set);
    for (size_t i = 0; i < set.size(); ++i) {
      for (size_t l = 0; l < set.size(); ++l) {
        cplx v = hs_inner(set.projectors()[i].matrix(), f.duals[l]);
        EXPECT_NEAR(std::abs(v - cplx(i == l ? 1 : 0)), 0, 1e-10);
      }
      EXPECT_LE(max_abs(f.duals[i] - oracle[i]), 1e-8);
    }
  }
}

TEST(dual_frame, self_dual_for_orthonormal_projector_basis) {
  // Projectors that are orthonormal in operator space exist only in dim 1.
  Vec e(1);
  e << 1;
  TomographicSet set({RankOneProjector(e)}, {{0}});
  DualFrame f = dual_frame(set);
  EXPECT_LE(max_abs(f.duals[0] - set.projectors()[0].matrix()), 1e-14);
}

TEST(dual_frame, minimal_discrete_subset_dim2) {
  TomographicSet set = minimal_subset(DiscreteSetBundle(2));
  DualFrame f = dual_frame(set);
  for (size_t i = 0; i < 4; ++i)
    for (size_t l = 0; l < 4; ++l)
      EXPECT_NEAR(std::abs(hs_inner(set.projectors()[i].matrix(), f.duals[l]) -
                           cplx(i == l ? 1 : 0)),
                  0, 1e-12);
}

TEST(dual_frame, projectors_reconstructed_from_own_tomograms) {
  std::mt19937_64 rng(4);
  TomographicSet set = random_minimal_set(3, rng);
  DualFrame f = dual_frame(set);
  for (const auto& p : set.projectors()) {
    EXPECT_LE(max_abs(reconstruct(f, tomogram(set, p.matrix())) - p.matrix()), 1e-10);
  }
}

TEST(dual_frame, resolution_of_unity_on_matrix_units) {
  std::mt19937_64 rng(5);
  TomographicSet set = random_minimal_set(3, rng);
  DualFrame f = dual_frame(set);
  MatrixUnits u(3);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      Mat e = u.unit(n, m), out = Mat::Zero(3, 3);
      for (size_t l = 0; l < set.size(); ++l) {
        out += set.projectors()[l].expectation(e) * f.duals[l];
      }
      EXPECT_LE(max_abs(out - e), 1e-10);
    }
  }
}

TEST(dual_frame, overcomplete_spin_grid_gives_closed_form_kernel) {
  SphereQuadrature q = sphere_quadrature(4, 6);
  DualFrame f = dual_frame(spin_set(q));
  EXPECT_FALSE(f.minimal);
  for (size_t k = 0; k < q.nodes.size(); ++k) {
    EXPECT_LE(max_abs(f.duals[k] - spin_kernel(q.nodes[k])), 1e-12);
  }
}

TEST(dual_frame, ill_conditioned_set_warns) {
  // Four nearby, non-concyclic Bloch points still span, but barely.
  std::vector<RankOneProjector> ps = {bloch_projector({0.5, 0.0}), bloch_projector({0.52, 0.0}),
                                      bloch_projector({0.5, 0.02}),
                                      bloch_projector({0.53, 0.05})};
  DualFrame f = dual_frame(TomographicSet(ps, {{0}, {1}, {2}, {3}}));
  EXPECT_GT(f.condition_number, 1e8);
  EXPECT_FALSE(f.warning.empty());
}

TEST(tomogram, examples) {
  std::mt19937_64 rng(6);
  TomographicSet set = random_minimal_set(2, rng);
  for (double v : tomogram(set, Mat::Identity(2, 2)).values) EXPECT_NEAR(v, 1, 1e-14);
  TomogramTable t = tomogram(set, set.projectors()[2].matrix());
  EXPECT_NEAR(t.values[2], 1, 1e-14);
  for (double v : tomogram(set, Mat::Identity(2, 2) / 2.0).values) EXPECT_NEAR(v, 0.5, 1e-14);
}

TEST(tomogram, errors) {
  std::mt19937_64 rng(7);
  TomographicSet set = random_minimal_set(2, rng);
  EXPECT_THROW(tomogram(set, Mat::Identity(3, 3)), DimensionError);
  Mat nonherm = Mat::Zero(2, 2);
  nonherm(0, 1) = 1;
  EXPECT_THROW(tomogram(set, nonherm), NumericalError);
}

TEST(reconstruct, roundtrip_zero_and_split) {
  std::mt19937_64 rng(8);
  for (int dim = 2; dim <= 4; ++dim) {
    TomographicSet set = random_minimal_set(dim, rng);
    DualFrame f = dual_frame(set);
    Mat a = random_hermitian(dim, rng);
    EXPECT_LE(max_abs(reconstruct(f, tomogram(set, a)) - a), 1e-10);
    EXPECT_LE(max_abs(reconstruct(f, tomogram(set, Mat::Zero(dim, dim)))), 1e-15);
    Mat b = random_matrix(dim, rng);
    EXPECT_LE(max_abs(reconstruct(f, split_tomogram(set, b)) - b), 1e-10);
  }
}

TEST(reconstruct, linearity) {
  std::mt19937_64 rng(9);
  TomographicSet set = random_minimal_set(3, rng);
  DualFrame f = dual_frame(set);
  TomogramTable ta = tomogram(set, random_hermitian(3, rng));
  TomogramTable tb = tomogram(set, random_hermitian(3, rng));
  TomogramTable sum = ta;
  for (size_t k = 0; k < sum.values.size(); ++k) sum.values[k] = 2.5 * ta.values[k] + tb.values[k];
  EXPECT_LE(max_abs(reconstruct(f, sum) - 2.5 * reconstruct(f, ta) - reconstruct(f, tb)), 1e-10);
}

TEST(reconstruct, permutation_equivariance) {
  std::mt19937_64 rng(10);
  TomographicSet set = random_minimal_set(3, rng);
  std::vector<size_t> perm(set.size());
  for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<RankOneProjector> ps;
  std::vector<Label> ls;
  for (size_t k : perm) {
    ps.push_back(set.projectors()[k]);
    ls.push_back(set.labels()[k]);
  }
  TomographicSet shuffled(ps, ls);
  DualFrame f = dual_frame(set), g = dual_frame(shuffled);
  for (size_t k = 0; k < perm.size(); ++k) EXPECT_LE(max_abs(g.duals[k] - f.duals[perm[k]]), 1e-9);
  Mat a = random_hermitian(3, rng);
  EXPECT_LE(max_abs(reconstruct(f, tomogram(set, a)) - reconstruct(g, tomogram(shuffled, a))),
            1e-10);
}

TEST(reconstruct, label_mismatch) {
  std::mt19937_64 rng(11);
  TomographicSet set = random_minimal_set(2, rng);
  DualFrame f = dual_frame(set);
  TomogramTable t = tomogram(set, Mat::Identity(2, 2));
  t.labels[1] = {42};
  EXPECT_THROW(reconstruct(f, t), LabelMismatchError);
  t.labels.pop_back();
  EXPECT_THROW(reconstruct(f, t), LabelMismatchError);
}
