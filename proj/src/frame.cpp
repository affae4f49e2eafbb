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

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace tomo {

namespace {

std::string fingerprint(int dim, const std::vector<Label>& labels) {
  std::ostringstream os;
  os.precision(17);
  os << dim << ':';
  for (const auto& l : labels) {
    for (double x : l) os << x << ',';
    os << ';';
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016zx", std::hash<std::string>{}(os.str()));
  return std::string("set-") + buf;
}

void check_labels(const std::vector<Label>& expected,
                  const std::vector<Label>& got) {
  if (expected.size() != got.size()) {
    throw LabelMismatchError("table has " + std::to_string(got.size()) +
                             " labels, frame has " +
                             std::to_string(expected.size()));
  }
  for (size_t i = 0; i < expected.size(); ++i) {
    if (expected[i].size() != got[i].size()) {
      throw LabelMismatchError("label " + std::to_string(i) + " has wrong arity");
    }
    for (size_t k = 0; k < expected[i].size(); ++k) {
      if (std::abs(expected[i][k] - got[i][k]) >
          1e-12 * std::max(1.0, std::abs(expected[i][k]))) {
        throw LabelMismatchError("label " + std::to_string(i) +
                                 " differs between frame and table");
      }
    }
  }
}

}  // namespace

TomographicSet::TomographicSet(std::vector<RankOneProjector> projectors,
                               std::vector<Label> labels,
                               std::vector<double> weights)
    : projectors_(std::move(projectors)),
      labels_(std::move(labels)),
      weights_(std::move(weights)) {
  if (projectors_.empty()) throw DegenerateInputError("empty tomographic set");
  if (projectors_.size() != labels_.size()) {
    throw LabelMismatchError("projector count and label count differ");
  }
  if (!weights_.empty() && weights_.size() != projectors_.size()) {
    throw LabelMismatchError("weight count and projector count differ");
  }
  for (double w : weights_) {
    if (!(w > 0)) throw DegenerateInputError("quadrature weights must be > 0");
  }
  dim_ = projectors_.front().dim();
  for (const auto& p : projectors_) {
    if (p.dim() != dim_) throw DimensionError("projectors of mixed dimension");
  }
  id_ = fingerprint(dim_, labels_);
}

Mat TomographicSet::frame_matrix() const {
  Mat m(static_cast<Eigen::Index>(dim_) * dim_,
        static_cast<Eigen::Index>(projectors_.size()));
  for (size_t k = 0; k < projectors_.size(); ++k) {
    m.col(static_cast<Eigen::Index>(k)) = vectorize(projectors_[k].matrix());
  }
  return m;
}

Orthonormalization orthonormalize(const TomographicSet& set) {
  const int d2 = set.dim() * set.dim();
  RankReport rr = gram_rank(set.projectors());
  if (rr.rank < d2) {
    throw IncompleteSetError("set spans " + std::to_string(rr.rank) + " of " +
                             std::to_string(d2) + " operator dimensions");
  }
  if (static_cast<int>(set.size()) != d2) {
    throw NotMinimalError("set has " + std::to_string(set.size()) +
                          " projectors, a basis needs " + std::to_string(d2));
  }
  Mat m = set.frame_matrix();
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ() * Mat::Identity(d2, d2);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  Mat rinv = r.triangularView<Eigen::Upper>().solve(Mat::Identity(d2, d2));
  Orthonormalization out;
  out.gamma = rinv.transpose();
  out.basis.reserve(d2);
  for (int j = 0; j < d2; ++j) out.basis.push_back(unvectorize(q.col(j), set.dim()));
  return out;
}

DualFrame dual_frame(const TomographicSet& set) {
  const int dim = set.dim();
  const int d2 = dim * dim;
  RankReport rr = gram_rank(set.projectors());
  if (rr.rank < d2) {
    throw IncompleteSetError("set spans " + std::to_string(rr.rank) + " of " +
                             std::to_string(d2) + " operator dimensions");
  }
  DualFrame f;
  f.labels = set.labels();
  f.weights = set.weights();
  f.source_id = set.id();
  f.dim = dim;
  f.condition_number = rr.condition_number;
  if (rr.condition_number > kConditionWarning) {
    f.warning = "Gram condition number " + std::to_string(rr.condition_number) +
                " exceeds 1e8; duals are unreliable";
  }
  if (static_cast<int>(set.size()) == d2 && !set.weighted()) {
    Orthonormalization on = orthonormalize(set);
    f.minimal = true;
    f.gamma = on.gamma;
    // K_l = sum_i conj(gamma_il) V_i
    f.duals.reserve(d2);
    for (int l = 0; l < d2; ++l) {
      Mat k = Mat::Zero(dim, dim);
      for (int i = 0; i < d2; ++i) k += std::conj(on.gamma(i, l)) * on.basis[i];
      f.duals.push_back(std::move(k));
    }
    return f;
  }
  // Over-complete (or weighted) set: canonical dual S^{-1} P_k with frame
  // operator S = sum_k w_k |P_k><P_k|.
  Mat m = set.frame_matrix();
  Eigen::VectorXd w(static_cast<Eigen::Index>(set.size()));
  for (size_t k = 0; k < set.size(); ++k) w(static_cast<Eigen::Index>(k)) = set.weight(k);
  Mat s = m * w.asDiagonal() * m.adjoint();
  Mat kmat = s.ldlt().solve(m);
  f.duals.reserve(set.size());
  for (Eigen::Index k = 0; k < kmat.cols(); ++k) {
    f.duals.push_back(unvectorize(kmat.col(k), dim));
  }
  return f;
}

TomogramTable tomogram(const TomographicSet& set, const Mat& a, double tol) {
  if (a.rows() != set.dim() || a.cols() != set.dim()) {
    throw DimensionError("operator dim " + std::to_string(a.rows()) +
                         " vs set dim " + std::to_string(set.dim()));
  }
  const double scale = std::max(1.0, max_abs(a));
  TomogramTable t;
  t.labels = set.labels();
  t.set_id = set.id();
  t.dim = set.dim();
  t.values.reserve(set.size());
  for (const auto& p : set.projectors()) {
    cplx v = p.expectation(a);
    if (std::abs(v.imag()) > tol * scale) {
      throw NumericalError(
          "tomogram has imaginary part " + std::to_string(v.imag()) +
          "; operator is not hermitian, use split_tomogram");
    }
    t.values.push_back(v.real());
  }
  return t;
}

Mat hermitian_part(const Mat& b) { return 0.5 * (b + b.adjoint()); }

Mat antihermitian_part(const Mat& b) {
  return cplx(0, 0.5) * (b - b.adjoint());
}

SplitTomogram split_tomogram(const TomographicSet& set, const Mat& b) {
  return {tomogram(set, hermitian_part(b)), tomogram(set, antihermitian_part(b))};
}

Mat reconstruct(const DualFrame& frame, const TomogramTable& table) {
  check_labels(frame.labels, table.labels);
  if (table.values.size() != table.labels.size()) {
    throw LabelMismatchError("table values and labels differ in length");
  }
  Mat a = Mat::Zero(frame.dim, frame.dim);
  for (size_t k = 0; k < frame.duals.size(); ++k) {
    double w = frame.weights.empty() ? 1.0 : frame.weights[k];
    a += (w * table.values[k]) * frame.duals[k];
  }
  return a;
}

Mat reconstruct(const DualFrame& frame, const SplitTomogram& split) {
  return reconstruct(frame, split.hermitian_part) -
         cplx(0, 1) * reconstruct(frame, split.antihermitian_part);
}

}  // namespace tomo
