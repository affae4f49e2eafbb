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

#include "tomo/operator_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace tomo {

Operator::Operator(Mat m, OperatorFlags flags, double tol)
    : m_(std::move(m)), flags_(flags) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionError("operator must be a non-empty square matrix, got " +
                         std::to_string(m_.rows()) + "x" +
                         std::to_string(m_.cols()));
  }
  if (flags_.hermitian && !is_hermitian(m_, tol)) {
    throw DegenerateInputError("operator flagged hermitian is not hermitian");
  }
  if (flags_.trace_one && std::abs(m_.trace() - cplx(1.0)) > tol) {
    throw DegenerateInputError("operator flagged trace_one has trace " +
                               std::to_string(m_.trace().real()));
  }
  if (flags_.positive) {
    if (!is_hermitian(m_, tol)) {
      throw DegenerateInputError("operator flagged positive is not hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
      throw DegenerateInputError("operator flagged positive has eigenvalue " +
                                 std::to_string(es.eigenvalues().minCoeff()));
    }
  }
}

Vec normalized(const Vec& psi) {
  double n = psi.norm();
  if (psi.size() == 0 || !(n > 0) || !std::isfinite(n)) {
    throw DegenerateInputError("cannot normalize a zero or non-finite vector");
  }
  return psi / n;
}

RankOneProjector::RankOneProjector(const Vec& psi) : psi_(normalized(psi)) {}

cplx RankOneProjector::expectation(const Mat& a) const {
  if (a.rows() != psi_.size() || a.cols() != psi_.size()) {
    throw DimensionError("projector dim " + std::to_string(psi_.size()) +
                         " vs operator dim " + std::to_string(a.rows()));
  }
  return psi_.dot(a * psi_);
}

cplx hs_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: dimension mismatch");
  }
  return a.conjugate().cwiseProduct(b).sum();
}

NormTriple norms(const Mat& a) {
  if (a.rows() != a.cols()) throw DimensionError("norms: matrix not square");
  Eigen::BDCSVD<Mat> svd(a);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("norms: singular value decomposition failed");
  }
  const Eigen::VectorXd& s = svd.singularValues();
  NormTriple t;
  t.operator_norm = s.size() ? s.maxCoeff() : 0.0;
  t.hs_norm = a.norm();
  t.trace_norm = s.sum();
  return t;
}

RankOneProjector projector_from_vector(const Vec& psi) {
  return RankOneProjector(psi);
}

Vec vectorize(const Mat& a) {
  return Eigen::Map<const Vec>(a.data(), a.size());
}

Mat unvectorize(const Eigen::Ref<const Vec>& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimensionError("unvectorize: length is not dim^2");
  }
  Mat m(dim, dim);
  for (int c = 0; c < dim; ++c) m.col(c) = v.segment(c * dim, dim);
  return m;
}

double max_abs(const Mat& a) {
  return a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
}

bool is_hermitian(const Mat& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols())) <= tol;
}

HermitianEigen hermitian_eigen(const Mat& h) {
  if (h.rows() != h.cols()) throw DimensionError("hermitian_eigen: not square");
  Mat sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym);
  if (es.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigen: eigensolver failed");
  }
  HermitianEigen out{es.eigenvalues(), es.eigenvectors()};
  for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
    Eigen::Index k = 0;
    out.vectors.col(c).cwiseAbs().maxCoeff(&k);
    cplx z = out.vectors(k, c);
    if (std::abs(z) > 0) out.vectors.col(c) *= std::conj(z) / std::abs(z);
  }
  return out;
}

Mat expi_hermitian(const Mat& h) {
  HermitianEigen e = hermitian_eigen(h);
  Vec phases(e.values.size());
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    phases(i) = std::exp(cplx(0, -e.values(i)));
  }
  return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

RankReport gram_rank(const std::vector<Mat>& ops) {
  if (ops.empty()) throw DegenerateInputError("rank of an empty set");
  const int dim = static_cast<int>(ops.front().rows());
  const Eigen::Index d2 = static_cast<Eigen::Index>(dim) * dim;
  const Eigen::Index count = static_cast<Eigen::Index>(ops.size());
  Mat m(d2, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    if (ops[j].rows() != dim || ops[j].cols() != dim) {
      throw DimensionError("gram_rank: operators of mixed dimension");
    }
    m.col(j) = vectorize(ops[j]);
  }
  // G = M^H M and M M^H share their nonzero spectrum; use the smaller one.
  Mat g = count <= d2 ? Mat(m.adjoint() * m) : Mat(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(g, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("gram_rank: eigensolver failed");
  }
  Eigen::VectorXd ev = es.eigenvalues().cwiseAbs();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<double>());
  const double top = ev.size() ? ev(0) : 0.0;
  const double thresh = top * static_cast<double>(d2) * 1e-12;
  RankReport r;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > thresh) ++r.rank;
  }
  const Eigen::Index lead = std::min<Eigen::Index>(count, d2);
  const double low = ev(lead - 1);
  r.condition_number = (top > 0 && low > thresh)
                           ? top / low
                           : std::numeric_limits<double>::infinity();
  return r;
}

RankReport gram_rank(const std::vector<RankOneProjector>& projectors) {
  std::vector<Mat> ops;
  ops.reserve(projectors.size());
  for (const auto& p : projectors) ops.push_back(p.matrix());
  return gram_rank(ops);
}

int completeness_rank(const std::vector<RankOneProjector>& projectors) {
  return gram_rank(projectors).rank;
}

}  // namespace tomo
