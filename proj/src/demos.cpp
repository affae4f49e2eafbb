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

#include "tomo/demos.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "tomo/continuous.hpp"
#include "tomo/discrete.hpp"
#include "tomo/generators.hpp"
#include "tomo/io.hpp"
#include "tomo/random.hpp"
#include "tomo/spin.hpp"

namespace tomo {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  RunConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const auto& v = it.value();
    try {
      if (k == "N") c.N = v.get<int>();
      else if (k == "tol") c.tol = v.get<double>();
      else if (k == "seed") c.seed = v.get<std::uint64_t>();
      else if (k == "out") c.out = v.get<std::string>();
      else if (k == "samples") c.samples = v.get<int>();
      else if (k == "spin_theta") c.spin_theta = v.get<int>();
      else if (k == "spin_phi") c.spin_phi = v.get<int>();
      else if (k == "position_points") c.position_points = v.get<int>();
      else if (k == "position_extent") c.position_extent = v.get<double>();
      else if (k == "photon_radius") c.photon_radius = v.get<double>();
      else if (k == "photon_radial") c.photon_radial = v.get<int>();
      else if (k == "photon_angular") c.photon_angular = v.get<int>();
      else if (k == "photon_support") c.photon_support = v.get<int>();
      else throw UsageError("unknown config key \"" + k + "\"");
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config key \"" + k + "\" has the wrong type");
    }
  }
  c.validate();
  return c;
}

void RunConfig::validate() const {
  if (N && *N < 1) throw UsageError("N must be positive");
  if (tol && !(*tol > 0 && *tol < 1)) throw UsageError("tol must lie in (0, 1)");
  if (samples < 0 || spin_theta < 1 || spin_phi < 1 || position_points < 4 ||
      !(position_extent > 0) || !(photon_radius > 0) || photon_radial < 1 ||
      photon_angular < 1 || photon_support < 1) {
    throw UsageError("grid sizes and sample counts must be positive");
  }
}

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"spin",   "discrete", "symplectic",
                                                 "photon", "squeeze",  "z2"};
  return names;
}

DemoReport run_demo(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  if (name == "spin") return demo_spin(cfg);
  if (name == "discrete") return demo_discrete(cfg);
  if (name == "symplectic") return demo_symplectic(cfg);
  if (name == "photon") return demo_photon(cfg);
  if (name == "squeeze") return demo_squeeze(cfg);
  if (name == "z2") return demo_z2(cfg);
  throw UsageError("unknown demo \"" + name + "\"");
}

DemoReport demo_spin(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const double tol = cfg.tol.value_or(1e-10);
  const int samples = cfg.samples ? cfg.samples : 100;
  std::mt19937_64 rng(cfg.seed);
  SphereQuadrature q = sphere_quadrature(cfg.spin_theta, cfg.spin_phi);
  double err_kernel = 0, err_projector = 0;
  Mat first;
  for (int k = 0; k < samples; ++k) {
    Mat a = random_hermitian(2, rng);
    if (k == 0) first = a;
    for (SpinMode mode : {SpinMode::kernel_weighted, SpinMode::projector_weighted}) {
      Mat rec = spin_reconstruct(q, spin_tomograms(q, a, mode), mode);
      double& e = mode == SpinMode::kernel_weighted ? err_kernel : err_projector;
      e = std::max(e, max_abs(rec - a));
    }
  }
  DemoReport r{"spin", false, {}};
  const double err = std::max(err_kernel, err_projector);
  r.passed = err <= tol;
  r.details = {{"input_matrix", matrix_to_json(first)},
               {"node_count", q.nodes.size()},
               {"samples", samples},
               {"reconstruction_error", err},
               {"error_kernel_weighted", err_kernel},
               {"error_projector_weighted", err_projector},
               {"tolerance", tol},
               {"seconds", seconds_since(t0)}};
  return r;
}

DemoReport demo_discrete(const RunConfig& cfg) {
  const int n_levels = cfg.N.value_or(kDefaultLevels);
  const double tol = cfg.tol.value_or(1e-12);
  const int samples = cfg.samples ? cfg.samples : 50;
  std::mt19937_64 rng(cfg.seed);
  DiscreteSetBundle bundle(n_levels);
  TomographicSet set = bundle.as_set();
  double err = 0;
  for (int k = 0; k < samples; ++k) {
    Mat b = k % 2 ? random_matrix(n_levels, rng) : random_hermitian(n_levels, rng);
    Mat rec = reconstruct_discrete(bundle, split_tomogram(set, b));
    err = std::max(err, max_abs(rec - b));
  }
  const MatrixUnits& u = bundle.units();
  double ident = 0;
  for (int n = 1; n <= n_levels; ++n) {
    for (int m = n + 1; m <= n_levels; ++m) {
      PairProjectors pp = pair_projectors(n, m, n_levels);
      Mat half = 0.5 * (u.unit(n, n) + u.unit(m, m));
      ident = std::max(ident, max_abs(pp.projectors[0].matrix() - (half + u.plus(n, m))));
      ident = std::max(ident, max_abs(pp.projectors[1].matrix() - (half - u.plus(n, m))));
      ident = std::max(ident, max_abs(pp.projectors[2].matrix() - (half + u.minus(n, m))));
      ident = std::max(ident, max_abs(pp.projectors[3].matrix() - (half - u.minus(n, m))));
    }
  }
  ResolutionReport res = resolution_of_unity_discrete(n_levels);
  int rank = completeness_rank(bundle.projectors());
  DemoReport r{"discrete", false, {}};
  r.passed = err <= tol && ident <= 1e-14 && res.max_deviation <= tol &&
             rank == n_levels * n_levels;
  r.details = {{"N", n_levels},
               {"samples", samples},
               {"roundtrip_error", err},
               {"pair_identity_error", ident},
               {"resolution_deviation", res.max_deviation},
               {"completeness_rank", rank},
               {"tolerance", tol}};
  return r;
}

DemoReport demo_symplectic(const RunConfig& cfg) {
  const double tol = cfg.tol.value_or(1e-8);
  const int samples = cfg.samples ? cfg.samples : 20;
  std::mt19937_64 rng(cfg.seed);
  PositionGrid grid{-cfg.position_extent, cfg.position_extent, cfg.position_points};
  Vec psi0 = hermite_state(grid, 0);
  Vec psi1 = hermite_state(grid, 1);
  Vec mix = normalized(psi0 + cplx(0.5, 0.5) * hermite_state(grid, 2)) /
            std::sqrt(grid.step());
  std::uniform_real_distribution<double> ux(-2, 2), um(-1.5, 1.5), un(0.2, 1.5);
  double err_ground = 0, err_norm = 0;
  for (int k = 0; k < samples; ++k) {
    SymplecticLabel l{ux(rng), um(rng), (k % 2 ? -1.0 : 1.0) * un(rng)};
    const double s2 = l.mu * l.mu + l.nu * l.nu;
    const double exact = std::exp(-l.X * l.X / s2) / std::sqrt(std::acos(-1.0) * s2);
    err_ground = std::max(err_ground, std::abs(symplectic_tomogram(grid, psi0, l) - exact));
    for (const Vec* psi : {&psi0, &psi1, &mix}) {
      TomogramRow row = symplectic_tomogram_row(grid, *psi, l.mu, l.nu);
      double total = 0;
      for (double v : row.values) total += v * row.step;
      err_norm = std::max(err_norm, std::abs(total - 1.0));
    }
  }
  SymplecticReconstruction rec = symplectic_reconstruct(grid, psi0);
  SymplecticIdentityReport id = symplectic_identity_check({{0.5, -0.5}, {1.0, 0.25}});
  DemoReport r{"symplectic", false, {}};
  r.passed = err_ground <= tol && err_norm <= tol && rec.fidelity >= 0.99 &&
             id.smoothed_max_deviation <= 1e-3 && id.peak_ratio >= 10;
  r.details = {{"grid_points", grid.points},
               {"samples", samples},
               {"ground_state_error", err_ground},
               {"normalization_error", err_norm},
               {"roundtrip_fidelity", rec.fidelity},
               {"smoothed_kernel_deviation", id.smoothed_max_deviation},
               {"peak_ratio", id.peak_ratio},
               {"tolerance", tol}};
  return r;
}

DemoReport demo_photon(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n_levels = cfg.N.value_or(16);
  const int support = std::min(cfg.photon_support, n_levels);
  const double tol = cfg.tol.value_or(1e-3);
  std::mt19937_64 rng(cfg.seed);
  Mat rho = random_density(support, n_levels, rng);
  AlphaGrid grid = polar_alpha_grid(cfg.photon_radius, cfg.photon_radial, cfg.photon_angular);
  const int n_max = default_photon_nmax(grid, n_levels);
  TomogramTable table = photon_tomogram_table(rho, grid, n_max);
  double norm_dev = 0;
  for (size_t g = 0; g < grid.nodes.size(); ++g) {
    double total = 0;
    for (int n = 0; n < n_max; ++n) total += table.values[g * n_max + n];
    norm_dev = std::max(norm_dev, std::abs(total - 1.0));
  }
  nlohmann::json per_s = nlohmann::json::array();
  std::vector<Mat> blocks;
  double worst = 0;
  for (double s : {-0.5, 0.0, 0.5}) {
    PhotonReconstruction rec = photon_reconstruct(table, s, grid, n_levels);
    Mat block = rec.rho.topLeftCorner(support, support);
    const double err = max_abs(block - rho.topLeftCorner(support, support));
    worst = std::max(worst, err);
    blocks.push_back(block);
    per_s.push_back({{"s", s},
                     {"support_error", err},
                     {"full_error", max_abs(rec.rho - rho)},
                     {"dropped_nodes", rec.dropped_nodes}});
  }
  double agree = 0;
  for (size_t a = 0; a < blocks.size(); ++a) {
    for (size_t b = a + 1; b < blocks.size(); ++b) {
      agree = std::max(agree, max_abs(blocks[a] - blocks[b]));
    }
  }
  const double secs = seconds_since(t0);
  DemoReport r{"photon", false, {}};
  r.passed = worst <= tol && agree <= 2 * tol && norm_dev <= 1e-6 && secs < 60;
  r.details = {{"N", n_levels},
               {"support_levels", support},
               {"radius", grid.radius},
               {"grid", {grid.n_radial, grid.n_angular}},
               {"n_max", n_max},
               {"reconstructions", per_s},
               {"max_support_error", worst},
               {"s_agreement", agree},
               {"tomogram_normalization_deviation", norm_dev},
               {"tolerance", tol},
               {"seconds", secs}};
  return r;
}

DemoReport demo_squeeze(const RunConfig& cfg) {
  const int n_levels = cfg.N.value_or(16);
  std::vector<std::pair<double, double>> grid;
  for (double mu : {-0.6, 0.0, 0.6}) {
    for (double nu : {-0.4, 0.3}) grid.emplace_back(mu, nu);
  }
  SqueezeFamily sf = squeeze_family_truncated(n_levels, grid);
  double witness_max = -1;
  if (sf.witness) {
    GeneratedSet g = generated_projector_set(sf.fiducial, sf.family);
    witness_max = 0;
    for (const cplx& v : complex_tomogram(g.set, sf.witness->witness)) {
      witness_max = std::max(witness_max, std::abs(v));
    }
  }
  DemoReport r{"squeeze", false, {}};
  r.passed = sf.parity_deviation <= 1e-8 && sf.witness && witness_max <= 1e-10 &&
             sf.completeness_rank < n_levels * n_levels;
  r.details = {{"N", n_levels},
               {"family_size", sf.family.members.size()},
               {"parity_deviation", sf.parity_deviation},
               {"completeness_rank", sf.completeness_rank},
               {"operator_space_dim", n_levels * n_levels},
               {"invariant_witness", sf.witness ? matrix_to_json(sf.witness->witness)
                                                : nlohmann::json(nullptr)},
               {"witness_max_tomogram", witness_max}};
  return r;
}

DemoReport demo_z2(const RunConfig&) {
  const double alpha = 1, beta = 1, gamma = 2;
  Mat t0(2, 2);
  t0 << alpha, beta, beta, gamma;
  UnitaryFamily fam;
  fam.labels = {{0}, {1}};
  fam.members = {Mat::Identity(2, 2), Mat(Eigen::Vector2cd(1, -1).asDiagonal())};
  FiducialOperator f = make_fiducial(t0);
  GeneratedSet g = generated_projector_set(f, fam);
  const int rank = completeness_rank(g.set.projectors());
  const bool irreducible = commutant_intersection_trivial(t0, fam);
  const bool complete = rank == 4;
  DemoReport r{"z2", false, {}};
  r.passed = irreducible && !complete && rank <= 3;
  r.details = {{"irreducible", irreducible},
               {"complete", complete},
               {"completeness_rank", rank},
               {"verdict", complete ? "tomographic" : "not tomographic"},
               {"invariant_witness", nullptr}};
  return r;
}

}  // namespace tomo
