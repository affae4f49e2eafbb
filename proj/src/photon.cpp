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

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "tomo/continuous.hpp"
#include "tomo/generators.hpp"
#include "tomo/quadrature.hpp"

namespace tomo {

namespace {

constexpr double kPi = std::numbers::pi;
// Per-node rounding budget; nodes whose alternating series would exceed it
// are skipped.
constexpr double kSeriesNoise = 1e-8;

void check_s(double s) {
  if (!(s > -1.0 && s < 1.0)) {
    throw ParameterError("kernel parameter s must lie in (-1, 1), got " +
                         std::to_string(s));
  }
}

}  // namespace

FockSpace::FockSpace(int n_levels) : levels(n_levels) {
  if (n_levels < 2) throw DegenerateInputError("Fock space needs N >= 2");
  a = annihilation(n_levels);
  adag = a.adjoint();
  number = adag * a;
}

void check_guard(const FockSpace& fock, cplx alpha, int n) {
  const double need = std::norm(alpha) + n;
  if (need > 0.5 * fock.levels) {
    throw TruncationError("|alpha|^2 + n = " + std::to_string(need) +
                          " exceeds N/2 = " + std::to_string(0.5 * fock.levels));
  }
}

Mat displacement(cplx alpha, const FockSpace& fock) {
  check_guard(fock, alpha);
  // exp(alpha a^dagger - conj(alpha) a) = exp(-i H)
  Mat h = cplx(0, 1) * (alpha * fock.adag - std::conj(alpha) * fock.a);
  return expi_hermitian(h);
}

Vec coherent_state(cplx alpha, const FockSpace& fock) {
  check_guard(fock, alpha);
  Vec v(fock.levels);
  v(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n < fock.levels; ++n) v(n) = v(n - 1) * alpha / std::sqrt(double(n));
  return v;
}

double husimi_q(const Mat& rho, cplx alpha, const FockSpace& fock) {
  if (rho.rows() != fock.levels || rho.cols() != fock.levels) {
    throw DimensionError("density matrix does not match the Fock space");
  }
  Vec v = coherent_state(alpha, fock);
  return v.dot(rho * v).real();
}

Mat displaced_number_amplitudes(cplx alpha, int rows, int cols) {
  if (rows < 1 || cols < 1) throw ParameterError("amplitude block must be non-empty");
  // v_j(n) = <n|D(beta)|j>, beta = -alpha, from
  //   D(beta)|j+1> = (a^dagger - conj(beta)) D(beta)|j> / sqrt(j+1).
  const cplx beta = -alpha;
  Mat v(cols, rows);
  v(0, 0) = std::exp(-0.5 * std::norm(beta));
  for (int n = 1; n < cols; ++n) v(n, 0) = v(n - 1, 0) * beta / std::sqrt(double(n));
  for (int j = 0; j + 1 < rows; ++j) {
    const double inv = 1.0 / std::sqrt(double(j + 1));
    for (int n = 0; n < cols; ++n) {
      cplx up = n > 0 ? std::sqrt(double(n)) * v(n - 1, j) : cplx(0);
      v(n, j + 1) = (up - std::conj(beta) * v(n, j)) * inv;
    }
  }
  // <j|D(alpha)|n> = conj(<n|D(-alpha)|j>)
  return v.adjoint();
}

Eigen::VectorXd photon_tomograms(const Mat& rho, cplx alpha, int n_max) {
  if (rho.rows() != rho.cols()) throw DimensionError("density matrix not square");
  const int levels = static_cast<int>(rho.rows());
  Mat d = displaced_number_amplitudes(alpha, levels, n_max);
  Mat rd = rho * d;
  Eigen::VectorXd t(n_max);
  for (int n = 0; n < n_max; ++n) t(n) = d.col(n).dot(rd.col(n)).real();
  return t;
}

double photon_tomogram(const Mat& rho, int n, cplx alpha) {
  if (n < 0) throw ParameterError("photon number must be >= 0");
  return photon_tomograms(rho, alpha, n + 1)(n);
}

Mat displaced_power(cplx alpha, double t, int levels) {
  // <j|D t^N D^dagger|k> = e^{c|alpha|^2} sum_m t^m (-c alpha)^{j-m}
  //   (-c conj(alpha))^{k-m} sqrt(j! k!) / (m! (j-m)! (k-m)!),  c = t - 1.
  const double c = t - 1.0;
  const cplx u = -c * alpha;
  std::vector<cplx> upow(levels, 1.0), vpow(levels, 1.0);
  std::vector<double> tpow(levels, 1.0), lf(levels + 1, 0.0);
  for (int p = 1; p < levels; ++p) {
    upow[p] = upow[p - 1] * u;
    vpow[p] = vpow[p - 1] * std::conj(u);
    tpow[p] = tpow[p - 1] * t;
  }
  for (int p = 1; p <= levels; ++p) lf[p] = lf[p - 1] + std::log(double(p));
  const double pre = std::exp(c * std::norm(alpha));
  Mat out(levels, levels);
  for (int j = 0; j < levels; ++j) {
    for (int k = 0; k < levels; ++k) {
      cplx sum = 0;
      for (int m = 0; m <= std::min(j, k); ++m) {
        const double coef =
            std::exp(0.5 * (lf[j] + lf[k]) - lf[m] - lf[j - m] - lf[k - m]);
        sum += coef * tpow[m] * upow[j - m] * vpow[k - m];
      }
      out(j, k) = pre * sum;
    }
  }
  return out;
}

Mat photon_kernel(int n, cplx alpha, double s, int levels) {
  check_s(s);
  if (n < 0) throw ParameterError("photon number must be >= 0");
  const double t = (s - 1.0) / (s + 1.0);
  return (4.0 / (1.0 - s * s)) * std::pow(1.0 / t, n) *
         displaced_power(alpha, t, levels);
}

AlphaGrid polar_alpha_grid(double radius, int n_radial, int n_angular) {
  if (!(radius > 0) || n_radial < 1 || n_angular < 1) {
    throw ParameterError("alpha grid needs R > 0 and positive node counts");
  }
  Quadrature1D gl = gauss_legendre(n_radial, 0.0, radius);
  AlphaGrid g;
  g.radius = radius;
  g.n_radial = n_radial;
  g.n_angular = n_angular;
  for (int i = 0; i < n_radial; ++i) {
    for (int k = 0; k < n_angular; ++k) {
      g.nodes.push_back(std::polar(gl.nodes[i], 2 * kPi * k / n_angular));
      g.weights.push_back(gl.weights[i] * gl.nodes[i] * 2 * kPi / n_angular);
    }
  }
  return g;
}

int default_photon_nmax(const AlphaGrid& grid, int levels) {
  const double r = grid.radius;
  return static_cast<int>(std::ceil(r * r + 10 * r + 2 * levels + 20));
}

TomogramTable photon_tomogram_table(const Mat& rho, const AlphaGrid& grid,
                                    int n_max) {
  if (n_max < 1) throw ParameterError("n_max must be positive");
  TomogramTable t;
  t.dim = static_cast<int>(rho.rows());
  t.metadata["grid"] = {{"kind", "photon_polar"},
                        {"radius", grid.radius},
                        {"n_radial", grid.n_radial},
                        {"n_angular", grid.n_angular},
                        {"n_max", n_max}};
  t.labels.reserve(grid.nodes.size() * n_max);
  for (const cplx& a : grid.nodes) {
    Eigen::VectorXd v = photon_tomograms(rho, a, n_max);
    for (int n = 0; n < n_max; ++n) {
      t.labels.push_back({double(n), a.real(), a.imag()});
      t.values.push_back(v(n));
    }
  }
  return t;
}

PhotonReconstruction photon_reconstruct(const TomogramTable& table, double s,
                                        const AlphaGrid& grid, int levels) {
  check_s(s);
  const size_t nodes = grid.nodes.size();
  if (nodes == 0 || table.values.size() % nodes != 0 ||
      table.labels.size() != table.values.size()) {
    throw LabelMismatchError("photon table does not tile the alpha grid");
  }
  const int n_max = static_cast<int>(table.values.size() / nodes);
  const double t = (s - 1.0) / (s + 1.0);
  const double r = 1.0 / t;
  const double pref = 4.0 / (1.0 - s * s);
  PhotonReconstruction out;
  out.n_max = n_max;
  out.rho = Mat::Zero(levels, levels);
  for (size_t g = 0; g < nodes; ++g) {
    double f = 0, mag = 0, rn = 1;
    for (int n = 0; n < n_max; ++n, rn *= r) {
      const size_t idx = g * n_max + n;
      const Label& l = table.labels[idx];
      if (l.size() != 3 || l[0] != n || std::abs(l[1] - grid.nodes[g].real()) > 1e-12 ||
          std::abs(l[2] - grid.nodes[g].imag()) > 1e-12) {
        throw LabelMismatchError("photon table label " + std::to_string(idx) +
                                 " does not match the grid");
      }
      f += rn * table.values[idx];
      mag += std::abs(rn * table.values[idx]);
    }
    const Mat g_op = displaced_power(grid.nodes[g], t, levels);
    const double w = grid.weights[g] / kPi * pref;
    // Rounding carried by the alternating sum, propagated to the output.
    if (mag * DBL_EPSILON * std::abs(w) * max_abs(g_op) > kSeriesNoise) {
      ++out.dropped_nodes;
      continue;
    }
    out.rho += (w * f) * g_op;
  }
  return out;
}

PhotonIdentityReport photon_identity_check(double s, int n_test,
                                           const AlphaGrid& grid, int n_max,
                                           bool vacuum_only) {
  check_s(s);
  if (n_test < 1 || n_max < 1) throw ParameterError("n_test and n_max must be positive");
  const double t = (s - 1.0) / (s + 1.0);
  const double r = 1.0 / t;
  const double pref = 4.0 / (1.0 - s * s);
  const int n_use = vacuum_only ? 1 : n_max;
  std::vector<Mat> out(n_test * n_test, Mat::Zero(n_test, n_test));
  PhotonIdentityReport rep;
  for (size_t g = 0; g < grid.nodes.size(); ++g) {
    const Mat d = displaced_number_amplitudes(grid.nodes[g], n_test, n_use);
    Mat f = Mat::Zero(n_test, n_test);
    Eigen::MatrixXd mag = Eigen::MatrixXd::Zero(n_test, n_test);
    double rn = 1;
    for (int n = 0; n < n_use; ++n, rn *= r) {
      // Tr(|n alpha><n alpha| E_ab) = conj(D_an) D_bn
      const Mat term = rn * d.col(n).conjugate() * d.col(n).transpose();
      f += term;
      mag += term.cwiseAbs();
    }
    const Mat g_op = displaced_power(grid.nodes[g], t, n_test);
    const double w = grid.weights[g] / kPi * pref;
    if (mag.maxCoeff() * DBL_EPSILON * std::abs(w) * max_abs(g_op) > kSeriesNoise) {
      ++rep.dropped_nodes;
      continue;
    }
    for (int a = 0; a < n_test; ++a) {
      for (int b = 0; b < n_test; ++b) out[a * n_test + b] += (w * f(a, b)) * g_op;
    }
  }
  for (int a = 0; a < n_test; ++a) {
    for (int b = 0; b < n_test; ++b) {
      Mat e = Mat::Zero(n_test, n_test);
      e(a, b) = 1.0;
      rep.max_deviation = std::max(rep.max_deviation, max_abs(out[a * n_test + b] - e));
    }
  }
  return rep;
}

}  // namespace tomo
