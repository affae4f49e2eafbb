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

#include "tomo/cli.hpp"

#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "tomo/demos.hpp"
#include "tomo/frame.hpp"
#include "tomo/generators.hpp"
#include "tomo/io.hpp"

namespace tomo {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(const json& j, const RunConfig& cfg, std::ostream& out) {
  const std::string text = dump_json(j) + "\n";
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

json check_complete(const std::string& path) {
  TomographicSet set = set_from_json(read_json_file(path));
  RankReport rr = gram_rank(set.projectors());
  const int d2 = set.dim() * set.dim();
  return {{"dim", set.dim()},
          {"count", set.size()},
          {"rank", rr.rank},
          {"complete", rr.rank == d2},
          {"condition_number", rr.condition_number}};
}

json tomogram_cmd(const std::string& set_path, const std::string& op_path) {
  TomographicSet set = set_from_json(read_json_file(set_path));
  Operator op = operator_from_json(read_json_file(op_path));
  if (is_hermitian(op.matrix())) return table_to_json(tomogram(set, op.matrix()));
  return split_to_json(split_tomogram(set, op.matrix()));
}

json reconstruct_cmd(const std::string& set_path, const std::string& table_path,
                     std::ostream& err) {
  TomographicSet set = set_from_json(read_json_file(set_path));
  json tj = read_json_file(table_path);
  DualFrame frame = dual_frame(set);
  if (!frame.warning.empty()) err << "warning: " << frame.warning << "\n";
  Mat a = is_split_table(tj) ? reconstruct(frame, split_from_json(tj))
                             : reconstruct(frame, table_from_json(tj));
  return matrix_to_json(a);
}

json dual_frame_cmd(const std::string& set_path, std::ostream& err) {
  TomographicSet set = set_from_json(read_json_file(set_path));
  DualFrame frame = dual_frame(set);
  if (!frame.warning.empty()) err << "warning: " << frame.warning << "\n";
  json duals = json::array();
  for (const auto& k : frame.duals) duals.push_back(matrix_to_json(k));
  json ls = json::array();
  for (const auto& l : frame.labels) ls.push_back(l);
  return {{"minimal", frame.minimal},
          {"condition_number", frame.condition_number},
          {"labels", ls},
          {"duals", duals}};
}

json check_irreducible(const std::string& path) {
  auto [t0, fam] = family_from_json(read_json_file(path));
  validate_family(fam, static_cast<int>(t0.rows()));
  FiducialOperator f = make_fiducial(t0);
  GeneratedSet g = generated_projector_set(
      f, fam, f.generic ? EigenSelection::all : EigenSelection::simple_only);
  auto w = common_invariant_subspace(t0, fam);
  return {{"irreducible", commutant_intersection_trivial(t0, fam)},
          {"invariant_witness", w ? matrix_to_json(w->witness) : json(nullptr)},
          {"completeness_rank", completeness_rank(g.set.projectors())}};
}

int exit_code_for(const TomoError& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UsageError*>(&e) ||
      dynamic_cast<const DimensionError*>(&e) ||
      dynamic_cast<const LabelMismatchError*>(&e) ||
      dynamic_cast<const DegenerateInputError*>(&e) ||
      dynamic_cast<const ParameterError*>(&e)) {
    return kUsage;
  }
  return kFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"tomo: tomographic sets, tomograms and reconstruction"};
  app.require_subcommand(1);
  std::string config_path, out_path;
  int n_flag = 0;
  double tol_flag = 0;
  std::uint64_t seed_flag = 0;
  auto* o_config = app.add_option("--config", config_path, "JSON run configuration");
  auto* o_n = app.add_option("--N", n_flag, "truncation dimension");
  auto* o_tol = app.add_option("--tol", tol_flag, "verification tolerance");
  auto* o_seed = app.add_option("--seed", seed_flag, "random seed");
  auto* o_out = app.add_option("--out", out_path, "output path (default stdout)");

  std::string set_path, op_path, table_path, family_path, demo_name;
  auto* c_complete = app.add_subcommand("check-complete", "rank and completeness of a set");
  c_complete->add_option("set", set_path)->required();
  auto* c_tomo = app.add_subcommand("tomogram", "tomogram table of an operator");
  c_tomo->add_option("set", set_path)->required();
  c_tomo->add_option("operator", op_path)->required();
  auto* c_rec = app.add_subcommand("reconstruct", "operator from a tomogram table");
  c_rec->add_option("set", set_path)->required();
  c_rec->add_option("table", table_path)->required();
  auto* c_dual = app.add_subcommand("dual-frame", "dual (kernel) operators of a set");
  c_dual->add_option("set", set_path)->required();
  auto* c_irr = app.add_subcommand("check-irreducible", "joint commutant of a family");
  c_irr->add_option("family", family_path)->required();
  auto* c_demo = app.add_subcommand("demo", "run a worked scenario");
  c_demo->add_option("name", demo_name)->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    RunConfig cfg;
    if (o_config->count()) cfg = RunConfig::from_json(read_json_file(config_path));
    if (o_n->count()) cfg.N = n_flag;
    if (o_tol->count()) cfg.tol = tol_flag;
    if (o_seed->count()) cfg.seed = seed_flag;
    if (o_out->count()) cfg.out = out_path;
    cfg.validate();

    if (c_complete->parsed()) {
      emit(check_complete(set_path), cfg, out);
    } else if (c_tomo->parsed()) {
      emit(tomogram_cmd(set_path, op_path), cfg, out);
    } else if (c_rec->parsed()) {
      emit(reconstruct_cmd(set_path, table_path, err), cfg, out);
    } else if (c_dual->parsed()) {
      emit(dual_frame_cmd(set_path, err), cfg, out);
    } else if (c_irr->parsed()) {
      emit(check_irreducible(family_path), cfg, out);
    } else if (c_demo->parsed()) {
      DemoReport r = run_demo(demo_name, cfg);
      json j = r.details;
      j["demo"] = r.name;
      j["pass"] = r.passed;
      emit(j, cfg, out);
      err << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
      return r.passed ? kOk : kFailed;
    }
    return kOk;
  } catch (const TomoError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace tomo
