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

#include "tomo/discrete.hpp"

#include <cmath>
#include <string>

namespace tomo {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int pair_slot(const PairLabel& c) {
  return (c.branch == Branch::plus ? 0 : 2) + (c.eig > 0 ? 0 : 1);
}

}  // namespace

MatrixUnits::MatrixUnits(int n_levels) : n_(n_levels) {
  if (n_levels < 2) {
    throw DegenerateInputError("matrix units need N >= 2, got " +
                               std::to_string(n_levels));
  }
}

MatrixUnits matrix_units(int n_levels) { return MatrixUnits(n_levels); }

void MatrixUnits::check(int n, int m) const {
  if (n < 1 || m < 1 || n > n_ || m > n_) {
    throw DimensionError("index (" + std::to_string(n) + "," +
                         std::to_string(m) + ") outside 1.." +
                         std::to_string(n_));
  }
}

Mat MatrixUnits::unit(int n, int m) const {
  check(n, m);
  Mat e = Mat::Zero(n_, n_);
  e(n - 1, m - 1) = 1.0;
  return e;
}

Mat MatrixUnits::plus(int n, int m) const {
  Mat e = unit(n, m);
  return 0.5 * (e + e.adjoint());
}

Mat MatrixUnits::minus(int n, int m) const {
  Mat e = unit(n, m);
  return cplx(0, 0.5) * (e - e.adjoint());
}

PairLabel PairLabel::canonical() const {
  if (branch == Branch::diagonal || n < m) return *this;
  PairLabel c = *this;
  std::swap(c.n, c.m);
  if (branch == Branch::minus) c.eig = -eig;
  return c;
}

Label PairLabel::to_label() const {
  return {static_cast<double>(n), static_cast<double>(m),
          static_cast<double>(static_cast<int>(branch)),
          static_cast<double>(eig)};
}

PairLabel PairLabel::from_label(const Label& l) {
  if (l.size() != 4) throw LabelMismatchError("pair label needs 4 entries");
  auto as_int = [](double x) {
    long r = std::lround(x);
    if (std::abs(x - static_cast<double>(r)) > 1e-9) {
      throw LabelMismatchError("pair label entries must be integers");
    }
    return static_cast<int>(r);
  };
  PairLabel p;
  p.n = as_int(l[0]);
  p.m = as_int(l[1]);
  int b = as_int(l[2]);
  p.eig = as_int(l[3]);
  if (b == 0) {
    p.branch = Branch::diagonal;
    if (p.n != p.m || p.eig != 0) {
      throw LabelMismatchError("diagonal label needs n = m and eig 0");
    }
  } else if (b == 1 || b == -1) {
    p.branch = b == 1 ? Branch::plus : Branch::minus;
    if (p.n == p.m || (p.eig != 1 && p.eig != -1)) {
      throw LabelMismatchError("pair label needs n != m and eig +-1");
    }
  } else {
    throw LabelMismatchError("branch must be 0, 1 or -1");
  }
  return p;
}

PairProjectors pair_projectors(int n, int m, int n_levels) {
  if (n == m) throw DegenerateInputError("pair projectors need n != m");
  if (n < 1 || m < 1 || n > n_levels || m > n_levels) {
    throw DimensionError("pair index outside 1..N");
  }
  Vec en = Vec::Zero(n_levels), em = Vec::Zero(n_levels);
  en(n - 1) = 1.0;
  em(m - 1) = 1.0;
  const cplx i(0, 1);
  std::array<Vec, 4> v = {Vec(kInvSqrt2 * (en + em)), Vec(kInvSqrt2 * (en - em)),
                          Vec(kInvSqrt2 * (em + i * en)),
                          Vec(kInvSqrt2 * (em - i * en))};
  return PairProjectors{v,
                        {RankOneProjector(v[0]), RankOneProjector(v[1]),
                         RankOneProjector(v[2]), RankOneProjector(v[3])}};
}

DiscreteSetBundle::DiscreteSetBundle(int n_levels)
    : n_(n_levels), units_(n_levels) {
  if (n_levels > kMaxLevels) {
    throw ParameterError("truncation N=" + std::to_string(n_levels) +
                         " exceeds the cap of " + std::to_string(kMaxLevels));
  }
  labels_.reserve(2 * n_ * n_ - n_);
  projectors_.reserve(2 * n_ * n_ - n_);
  for (int n = 1; n <= n_; ++n) {
    Vec e = Vec::Zero(n_);
    e(n - 1) = 1.0;
    labels_.push_back({n, n, Branch::diagonal, 0});
    projectors_.emplace_back(e);
  }
  for (int n = 1; n <= n_; ++n) {
    for (int m = n + 1; m <= n_; ++m) {
      PairProjectors pp = pair_projectors(n, m, n_);
      labels_.push_back({n, m, Branch::plus, 1});
      labels_.push_back({n, m, Branch::plus, -1});
      labels_.push_back({n, m, Branch::minus, 1});
      labels_.push_back({n, m, Branch::minus, -1});
      for (auto& p : pp.projectors) projectors_.push_back(p);
    }
  }
}

TomographicSet DiscreteSetBundle::as_set() const {
  std::vector<Label> ls;
  ls.reserve(labels_.size());
  for (const auto& l : labels_) ls.push_back(l.to_label());
  return TomographicSet(projectors_, std::move(ls));
}

int DiscreteSetBundle::index_of(const PairLabel& l) const {
  PairLabel c = l.canonical();
  if (c.n < 1 || c.m < 1 || c.n > n_ || c.m > n_) return -1;
  if (c.branch == Branch::diagonal) return c.n == c.m ? c.n - 1 : -1;
  if (c.n == c.m || (c.eig != 1 && c.eig != -1)) return -1;
  const int before = (c.n - 1) * n_ - (c.n - 1) * c.n / 2 + (c.m - c.n - 1);
  return n_ + 4 * before + pair_slot(c);
}

Mat reconstruct_discrete(const DiscreteSetBundle& bundle,
                         const TomogramTable& table) {
  if (table.labels.size() != table.values.size()) {
    throw LabelMismatchError("table values and labels differ in length");
  }
  const size_t total = bundle.pair_labels().size();
  std::vector<double> v(total, 0.0);
  std::vector<bool> seen(total, false);
  for (size_t k = 0; k < table.labels.size(); ++k) {
    int idx = bundle.index_of(PairLabel::from_label(table.labels[k]));
    if (idx < 0) throw LabelMismatchError("label outside the bundle");
    if (seen[idx]) throw LabelMismatchError("duplicate label in table");
    seen[idx] = true;
    v[idx] = table.values[k];
  }
  for (size_t k = 0; k < total; ++k) {
    if (!seen[k]) {
      const PairLabel& l = bundle.pair_labels()[k];
      throw LabelMismatchError("table misses label (" + std::to_string(l.n) +
                               "," + std::to_string(l.m) + ")");
    }
  }
  const int n_levels = bundle.levels();
  const MatrixUnits& u = bundle.units();
  Mat b = Mat::Zero(n_levels, n_levels);
  for (int n = 1; n <= n_levels; ++n) b(n - 1, n - 1) = v[n - 1];
  size_t k = n_levels;
  for (int n = 1; n <= n_levels; ++n) {
    for (int m = n + 1; m <= n_levels; ++m, k += 4) {
      b += (v[k] - v[k + 1]) * u.plus(n, m);
      b += (v[k + 2] - v[k + 3]) * u.minus(n, m);
    }
  }
  return b;
}

Mat reconstruct_discrete(const DiscreteSetBundle& bundle,
                         const SplitTomogram& split) {
  return reconstruct_discrete(bundle, split.hermitian_part) -
         cplx(0, 1) * reconstruct_discrete(bundle, split.antihermitian_part);
}

ResolutionReport resolution_of_unity_discrete(int n_levels, bool include_pairs) {
  DiscreteSetBundle bundle(n_levels);
  const MatrixUnits& u = bundle.units();
  ResolutionReport rep;
  rep.levels = n_levels;
  for (int a = 1; a <= n_levels; ++a) {
    for (int c = 1; c <= n_levels; ++c) {
      const Mat e = u.unit(a, c);
      Mat out = Mat::Zero(n_levels, n_levels);
      size_t k = 0;
      for (int n = 1; n <= n_levels; ++n, ++k) {
        // Tr(P e) is the super-operator <P|e> for Hermitian P.
        out += bundle.projectors()[k].expectation(e) *
               bundle.projectors()[k].matrix();
      }
      if (include_pairs) {
        for (int n = 1; n <= n_levels; ++n) {
          for (int m = n + 1; m <= n_levels; ++m, k += 4) {
            const auto& p = bundle.projectors();
            const Mat ep = u.plus(n, m), em = u.minus(n, m);
            out += p[k].expectation(e) * ep - p[k + 1].expectation(e) * ep;
            out += p[k + 2].expectation(e) * em - p[k + 3].expectation(e) * em;
          }
        }
      }
      rep.max_deviation = std::max(rep.max_deviation, max_abs(out - e));
    }
  }
  return rep;
}

TomographicSet minimal_subset(const DiscreteSetBundle& bundle) {
  std::vector<RankOneProjector> ps;
  std::vector<Label> ls;
  const auto& all = bundle.projectors();
  const auto& labels = bundle.pair_labels();
  for (size_t k = 0; k < all.size(); ++k) {
    const PairLabel& l = labels[k];
    if (l.branch == Branch::diagonal || l.eig == 1) {
      ps.push_back(all[k]);
      ls.push_back(l.to_label());
    }
  }
  return TomographicSet(std::move(ps), std::move(ls));
}

}  // namespace tomo
