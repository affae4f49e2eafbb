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

#include "tomo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tomo {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double as_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

json label_to_json(const Label& l) {
  json a = json::array();
  for (double x : l) {
    if (x == std::round(x) && std::abs(x) < 1e15) {
      a.push_back(static_cast<long long>(x));
    } else {
      a.push_back(x);
    }
  }
  return a;
}

Label label_from_json(const json& j) {
  Label l;
  if (j.is_number()) {
    l.push_back(j.get<double>());
  } else if (j.is_array()) {
    for (const auto& x : j) l.push_back(as_number(x, "label entry"));
  } else {
    throw ParseError("labels must be numbers or arrays of numbers");
  }
  return l;
}

std::vector<Label> labels_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("\"labels\" must be an array");
  std::vector<Label> out;
  for (const auto& x : j) out.push_back(label_from_json(x));
  return out;
}

std::vector<double> numbers_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(as_number(x, what));
  return out;
}

Mat matrix_from_json(const json& j) {
  const json& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  const long long n = d.get<long long>();
  const json& e = field(j, "entries");
  if (!e.is_array() || static_cast<long long>(e.size()) != n * n) {
    throw ParseError("\"entries\" must hold exactly dim^2 = " +
                     std::to_string(n * n) + " complex pairs");
  }
  Mat m(n, n);
  for (long long k = 0; k < n * n; ++k) {
    const json& z = e[k];
    if (!z.is_array() || z.size() != 2) {
      throw ParseError("entry " + std::to_string(k) + " is not a [re, im] pair");
    }
    m(k / n, k % n) = cplx(as_number(z[0], "real part"), as_number(z[1], "imaginary part"));
  }
  return m;
}

void dump_number(std::ostream& os, const json& j) {
  if (j.is_number_integer()) {
    os << j.dump();
    return;
  }
  const double x = j.get<double>();
  if (!std::isfinite(x)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  os << s;
}

void dump_rec(std::ostream& os, const json& j, int indent, int depth) {
  const std::string pad(indent > 0 ? indent * (depth + 1) : 0, ' ');
  const std::string close_pad(indent > 0 ? indent * depth : 0, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  // Short numeric arrays stay on one line.
  auto flat = [](const json& a) {
    if (!a.is_array() || a.size() > 4) return false;
    for (const auto& x : a) {
      if (!x.is_number()) return false;
    }
    return true;
  };
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << '{' << nl;
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ',' << nl;
      first = false;
      os << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
      dump_rec(os, it.value(), indent, depth + 1);
    }
    os << nl << close_pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    if (flat(j) || indent == 0) {
      os << '[';
      for (size_t k = 0; k < j.size(); ++k) {
        if (k) os << (indent > 0 ? ", " : ",");
        dump_rec(os, j[k], 0, 0);
      }
      os << ']';
      return;
    }
    os << '[' << nl;
    for (size_t k = 0; k < j.size(); ++k) {
      if (k) os << ',' << nl;
      os << pad;
      dump_rec(os, j[k], indent, depth + 1);
    }
    os << nl << close_pad << ']';
  } else if (j.is_number()) {
    dump_number(os, j);
  } else {
    os << j.dump();
  }
}

}  // namespace

json matrix_to_json(const Mat& m) {
  json e = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      e.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return json{{"dim", m.rows()}, {"entries", e}};
}

json operator_to_json(const Operator& op) {
  json j = matrix_to_json(op.matrix());
  const auto& f = op.flags();
  if (f.hermitian || f.positive || f.trace_one) {
    j["flags"] = {{"hermitian", f.hermitian},
                  {"positive", f.positive},
                  {"trace_one", f.trace_one}};
  }
  return j;
}

Operator operator_from_json(const json& j) {
  Mat m = matrix_from_json(j);
  OperatorFlags flags;
  if (j.contains("flags")) {
    const json& f = j.at("flags");
    if (!f.is_object()) throw ParseError("\"flags\" must be an object");
    auto get = [&](const char* k) {
      if (!f.contains(k)) return false;
      if (!f.at(k).is_boolean()) throw ParseError(std::string("flag ") + k + " must be boolean");
      return f.at(k).get<bool>();
    };
    flags.hermitian = get("hermitian");
    flags.positive = get("positive");
    flags.trace_one = get("trace_one");
  }
  return Operator(std::move(m), flags);
}

json set_to_json(const TomographicSet& set) {
  json ps = json::array(), ls = json::array();
  for (const auto& p : set.projectors()) ps.push_back(matrix_to_json(p.matrix()));
  for (const auto& l : set.labels()) ls.push_back(label_to_json(l));
  json j{{"dim", set.dim()}, {"projectors", ps}, {"labels", ls}};
  if (set.weighted()) j["weights"] = set.weights();
  return j;
}

TomographicSet set_from_json(const json& j) {
  const json& ps = field(j, "projectors");
  if (!ps.is_array() || ps.empty()) throw ParseError("\"projectors\" must be a non-empty array");
  std::vector<RankOneProjector> projectors;
  for (size_t k = 0; k < ps.size(); ++k) {
    Mat p = matrix_from_json(ps[k]);
    if (!is_hermitian(p) || std::abs(p.trace() - cplx(1)) > kTolFinite ||
        max_abs(p * p - p) > kTolFinite) {
      throw DegenerateInputError("projector " + std::to_string(k) +
                                 " is not a rank-one projector");
    }
    HermitianEigen e = hermitian_eigen(p);
    projectors.emplace_back(e.vectors.col(e.values.size() - 1));
  }
  std::vector<Label> labels;
  if (j.contains("labels")) {
    labels = labels_from_json(j.at("labels"));
  } else {
    for (size_t k = 0; k < projectors.size(); ++k) labels.push_back({double(k)});
  }
  std::vector<double> weights;
  if (j.contains("weights")) weights = numbers_from_json(j.at("weights"), "\"weights\"");
  TomographicSet set(std::move(projectors), std::move(labels), std::move(weights));
  if (j.contains("dim") && j.at("dim") != set.dim()) {
    throw DimensionError("declared dim does not match the projectors");
  }
  return set;
}

json table_to_json(const TomogramTable& t) {
  json ls = json::array();
  for (const auto& l : t.labels) ls.push_back(label_to_json(l));
  json j{{"labels", ls}, {"values", t.values}, {"dim", t.dim}};
  if (!t.set_id.empty()) j["set_id"] = t.set_id;
  if (t.metadata.contains("grid")) j["grid"] = t.metadata["grid"];
  return j;
}

json split_to_json(const SplitTomogram& s) {
  json j = table_to_json(s.hermitian_part);
  j["values_antihermitian"] = s.antihermitian_part.values;
  return j;
}

TomogramTable table_from_json(const json& j) {
  TomogramTable t;
  t.labels = labels_from_json(field(j, "labels"));
  t.values = numbers_from_json(field(j, "values"), "\"values\"");
  if (t.labels.size() != t.values.size()) {
    throw ParseError("\"labels\" and \"values\" differ in length");
  }
  if (j.contains("set_id") && j.at("set_id").is_string()) t.set_id = j.at("set_id");
  if (j.contains("dim") && j.at("dim").is_number_integer()) t.dim = j.at("dim");
  if (j.contains("grid")) t.metadata["grid"] = j.at("grid");
  return t;
}

bool is_split_table(const json& j) {
  return j.is_object() && j.contains("values_antihermitian");
}

SplitTomogram split_from_json(const json& j) {
  SplitTomogram s;
  s.hermitian_part = table_from_json(j);
  s.antihermitian_part = s.hermitian_part;
  s.antihermitian_part.values =
      numbers_from_json(j.at("values_antihermitian"), "\"values_antihermitian\"");
  if (s.antihermitian_part.values.size() != s.hermitian_part.values.size()) {
    throw ParseError("\"values_antihermitian\" has the wrong length");
  }
  return s;
}

std::pair<Mat, UnitaryFamily> family_from_json(const json& j) {
  Mat t0 = matrix_from_json(field(j, "fiducial"));
  const json& fam = field(j, "family");
  if (!fam.is_array() || fam.empty()) throw ParseError("\"family\" must be a non-empty array");
  UnitaryFamily u;
  for (const auto& m : fam) u.members.push_back(matrix_from_json(m));
  if (j.contains("labels")) {
    u.labels = labels_from_json(j.at("labels"));
  } else {
    for (size_t k = 0; k < u.members.size(); ++k) u.labels.push_back({double(k)});
  }
  return {t0, u};
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    const size_t end = std::min(e.byte, text.size() + 1);
    for (size_t k = 0; k + 1 < end && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": malformed JSON (" + e.what() + ")");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string dump_json(const json& j, int indent) {
  std::ostringstream os;
  dump_rec(os, j, indent, 0);
  return os.str();
}

}  // namespace tomo
