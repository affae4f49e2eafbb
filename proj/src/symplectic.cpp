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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tomo/continuous.hpp"

namespace tomo {

namespace {

constexpr double kPi = std::numbers::pi;

double grid_norm2(const PositionGrid& grid, const Vec& psi) {
  return psi.squaredNorm() * grid.step();
}

void check_state(const PositionGrid& grid, const Vec& psi) {
  grid.validate();
  if (psi.size() != grid.points) {
    throw DimensionError("wavefunction length " + std::to_string(psi.size()) +
                         " vs grid of " + std::to_string(grid.points));
  }
  const double n2 = grid_norm2(grid, psi);
  if (std::abs(n2 - 1.0) > kTolTrunc) {
    throw DegenerateInputError("wavefunction is not normalized on the grid (norm^2=" +
                               std::to_string(n2) + ")");
  }
}

// Four-point Lagrange interpolation; zero outside the grid.
cplx interpolate(const PositionGrid& grid, const Vec& psi, double x) {
  const double h = grid.step();
  const double u = (x - grid.q_min) / h;
  if (u < 0 || u > grid.points - 1) return 0.0;
  long i0 = static_cast<long>(std::floor(u)) - 1;
  i0 = std::clamp<long>(i0, 0, grid.points - 4);
  cplx sum = 0;
  for (int a = 0; a < 4; ++a) {
    double w = 1;
    for (int b = 0; b < 4; ++b) {
      if (b != a) w *= (u - (i0 + b)) / static_cast<double>(a - b);
    }
    sum += w * psi(i0 + a);
  }
  return sum;
}

// Amplitudes <X mu nu|psi> for X = xs[k], nu != 0. The X-phase is advanced by
// multiplication along the grid.
std::vector<cplx> amplitudes(const PositionGrid& grid, const Vec& psi,
                             double mu, double nu, const std::vector<double>& xs) {
  const double h = grid.step();
  std::vector<cplx> chirped(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    const double q = grid.q(i);
    chirped[i] = psi(i) * std::polar(1.0, mu * q * q / (2 * nu));
  }
  const double norm = h / std::sqrt(2 * kPi * std::abs(nu));
  std::vector<cplx> out(xs.size());
  for (size_t k = 0; k < xs.size(); ++k) {
    const double kx = -xs[k] / nu;
    cplx ph = std::polar(1.0, kx * grid.q_min);
    const cplx step = std::polar(1.0, kx * h);
    cplx sum = 0;
    for (int i = 0; i < grid.points; ++i) {
      sum += chirped[i] * ph;
      ph *= step;
    }
    out[k] = sum * norm;
  }
  return out;
}

}  // namespace

void PositionGrid::validate() const {
  if (points < 4 || !(q_max > q_min)) {
    throw ParameterError("position grid needs >= 4 points and q_max > q_min");
  }
}

double hermite_function(int n, double q) {
  if (n < 0) throw ParameterError("Hermite index must be >= 0");
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * q * q);
  for (int k = 0; k < n; ++k) {
    double next = std::sqrt(2.0 / (k + 1)) * q * cur -
                  std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Vec hermite_state(const PositionGrid& grid, int n) {
  grid.validate();
  Vec psi(grid.points);
  for (int i = 0; i < grid.points; ++i) psi(i) = hermite_function(n, grid.q(i));
  return psi;
}

cplx symplectic_eigenfunction(double q, const SymplecticLabel& l) {
  if (l.nu == 0.0) {
    throw UseDirectBranchError("eigenfunction is a delta at nu = 0");
  }
  const double phase = -(l.mu / (2 * l.nu) * q * q - l.X / l.nu * q);
  return std::polar(1.0 / std::sqrt(2 * kPi * std::abs(l.nu)), phase);
}

double symplectic_tomogram(const PositionGrid& grid, const Vec& psi,
                           const SymplecticLabel& l) {
  check_state(grid, psi);
  if (l.nu == 0.0) {
    if (l.mu == 0.0) throw DegenerateInputError("(mu, nu) = (0, 0)");
    return std::norm(interpolate(grid, psi, l.X / l.mu)) / std::abs(l.mu);
  }
  return std::norm(amplitudes(grid, psi, l.mu, l.nu, {l.X})[0]);
}

TomogramRow symplectic_tomogram_row(const PositionGrid& grid, const Vec& psi,
                                    double mu, double nu) {
  check_state(grid, psi);
  const double s = std::hypot(mu, nu);
  if (s == 0.0) throw DegenerateInputError("(mu, nu) = (0, 0)");
  TomogramRow row;
  row.step = s * grid.step();
  row.x.resize(grid.points);
  for (int i = 0; i < grid.points; ++i) row.x[i] = s * grid.q(i);
  row.values.resize(grid.points);
  if (nu == 0.0) {
    for (int i = 0; i < grid.points; ++i) {
      row.values[i] = std::norm(interpolate(grid, psi, row.x[i] / mu)) / std::abs(mu);
    }
    return row;
  }
  std::vector<cplx> amp = amplitudes(grid, psi, mu, nu, row.x);
  for (int i = 0; i < grid.points; ++i) row.values[i] = std::norm(amp[i]);
  return row;
}

cplx smoothed_kernel_numeric(double q, double q2, double y, double y2,
                             const SmoothedKernelConfig& cfg) {
  const double nu = y - y2;
  if (nu == 0.0) throw ParameterError("smoothed kernel needs y != y'");
  const double xmax = cfg.box_sigmas * cfg.window_x;
  const double mmax = cfg.box_sigmas * cfg.window_mu;
  const double hx = 2 * xmax / (cfg.x_points - 1);
  const double hm = 2 * mmax / (cfg.mu_points - 1);
  const double u = (nu + q2 - q) / nu;
  const double c = (q * q - q2 * q2) / (2 * nu) - 0.5 * (y + y2);
  if (std::abs(u) * hx > 1.0 || std::abs(c) * hm > 1.0 ||
      (std::abs(1.0 / nu) + 1.0) * hx > 1.0) {
    throw NumericalError("smoothed kernel quadrature under-resolved: u*hx=" +
                         std::to_string(std::abs(u) * hx) +
                         " c*hmu=" + std::to_string(std::abs(c) * hm));
  }
  cplx total = 0;
  for (int a = 0; a < cfg.mu_points; ++a) {
    const double mu = -mmax + a * hm;
    const double wm = std::exp(-mu * mu / (2 * cfg.window_mu * cfg.window_mu)) *
                      (a == 0 || a == cfg.mu_points - 1 ? 0.5 : 1.0);
    const cplx kernel_mu = std::polar(wm, -mu * 0.5 * (y + y2));
    cplx inner = 0;
    for (int b = 0; b < cfg.x_points; ++b) {
      const double x = -xmax + b * hx;
      const double wx = std::exp(-x * x / (2 * cfg.window_x * cfg.window_x)) *
                        (b == 0 || b == cfg.x_points - 1 ? 0.5 : 1.0);
      const SymplecticLabel l{x, mu, nu};
      inner += std::polar(wx, x) * symplectic_eigenfunction(q2, l) *
               std::conj(symplectic_eigenfunction(q, l));
    }
    total += kernel_mu * inner;
  }
  return total * hx * hm / (2 * kPi);
}

double smoothed_kernel_analytic(double q, double q2, double y, double y2,
                                const SmoothedKernelConfig& cfg) {
  const double nu = y - y2;
  if (nu == 0.0) throw ParameterError("smoothed kernel needs y != y'");
  const double u = (nu + q2 - q) / nu;
  const double c = (q * q - q2 * q2) / (2 * nu) - 0.5 * (y + y2);
  const double l = cfg.window_x, m = cfg.window_mu;
  return l * m / (2 * kPi * std::abs(nu)) *
         std::exp(-0.5 * l * l * u * u - 0.5 * m * m * c * c);
}

SymplecticIdentityReport symplectic_identity_check(
    const std::vector<std::pair<double, double>>& ys,
    const SmoothedKernelConfig& cfg) {
  SymplecticIdentityReport rep;
  rep.peak_ratio = std::numeric_limits<double>::infinity();
  const double shifts[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {1, 1}};
  for (const auto& [y, y2] : ys) {
    const cplx peak = smoothed_kernel_numeric(y, y2, y, y2, cfg);
    const double peak_ref = smoothed_kernel_analytic(y, y2, y, y2, cfg);
    double dev = std::abs(peak - peak_ref);
    double off = 0;
    for (const auto& d : shifts) {
      const double q = y + d[0], q2 = y2 + d[1];
      const cplx v = smoothed_kernel_numeric(q, q2, y, y2, cfg);
      dev = std::max(dev, std::abs(v - smoothed_kernel_analytic(q, q2, y, y2, cfg)));
      off = std::max(off, std::abs(v));
    }
    rep.smoothed_max_deviation = std::max(rep.smoothed_max_deviation, dev / peak_ref);
    rep.peak_ratio = std::min(rep.peak_ratio,
                              off > 0 ? std::abs(peak) / off
                                      : std::numeric_limits<double>::infinity());
  }
  return rep;
}

SymplecticReconstruction symplectic_reconstruct(const PositionGrid& grid,
                                                const Vec& psi, int y_points,
                                                double y_max, int mu_points,
                                                double mu_max, int ref_level) {
  check_state(grid, psi);
  if (y_points < 2 || mu_points < 2) throw ParameterError("reconstruction grid too small");
  if (mu_points % 2) {
    throw ParameterError("mu_points must be even so that mu = 0 is not a node");
  }
  SymplecticReconstruction out;
  const double dy = 2 * y_max / (y_points - 1);
  for (int i = 0; i < y_points; ++i) out.y.push_back(-y_max + i * dy);
  const double dmu = 2 * mu_max / mu_points;
  std::vector<double> mus(mu_points);
  for (int k = 0; k < mu_points; ++k) mus[k] = -mu_max + (k + 0.5) * dmu;

  // chi(mu_k, d * dy) for every index offset d.
  const int nd = 2 * y_points - 1;
  std::vector<std::vector<cplx>> chi(nd, std::vector<cplx>(mu_points));
  for (int d = -(y_points - 1); d < y_points; ++d) {
    const double nu = d * dy;
    for (int k = 0; k < mu_points; ++k) {
      TomogramRow row = symplectic_tomogram_row(grid, psi, mus[k], nu);
      cplx sum = 0;
      for (size_t i = 0; i < row.x.size(); ++i) sum += row.values[i] * std::polar(1.0, row.x[i]);
      chi[d + y_points - 1][k] = sum * row.step;
    }
  }
  out.rho = Mat::Zero(y_points, y_points);
  for (int i = 0; i < y_points; ++i) {
    for (int j = 0; j < y_points; ++j) {
      const auto& c = chi[i - j + y_points - 1];
      cplx sum = 0;
      for (int k = 0; k < mu_points; ++k) {
        sum += c[k] * std::polar(1.0, -mus[k] * 0.5 * (out.y[i] + out.y[j]));
      }
      out.rho(i, j) = sum * dmu / (2 * kPi);
    }
  }
  cplx f = 0;
  for (int i = 0; i < y_points; ++i) {
    for (int j = 0; j < y_points; ++j) {
      f += hermite_function(ref_level, out.y[i]) * out.rho(i, j) *
           hermite_function(ref_level, out.y[j]);
    }
  }
  out.fidelity = f.real() * dy * dy;
  return out;
}

}  // namespace tomo
