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

#include <random>

#include "gtest/gtest.h"
#include "tomo/discrete.hpp"
#include "tomo/random.hpp"

using namespace tomo;

TEST(io, matrix_roundtrip_is_exact) {
  std::mt19937_64 rng(1);
  Mat m = random_matrix(3, rng);
  json j = parse_json_text(dump_json(matrix_to_json(m)), "mem");
  Operator op = operator_from_json(j);
  EXPECT_EQ(max_abs(op.matrix() - m), 0.0);
}

TEST(io, operator_flags_are_checked) {
  Mat m(2, 2);
  m << 1, 0, 0, 0;
  json j = operator_to_json(Operator(m, {true, true, true}));
  EXPECT_TRUE(j.at("flags").at("positive").get<bool>());
  EXPECT_NO_THROW(operator_from_json(j));
  j["entries"][3] = json::array({-1.0, 0.0});
  EXPECT_THROW(operator_from_json(j), TomoError);
}

TEST(io, set_roundtrip) {
  DiscreteSetBundle b(3);
  TomographicSet set = b.as_set();
  TomographicSet back = set_from_json(parse_json_text(dump_json(set_to_json(set)), "mem"));
  ASSERT_EQ(back.size(), set.size());
  EXPECT_EQ(back.id(), set.id());
  for (size_t k = 0; k < set.size(); ++k) {
    EXPECT_LE(max_abs(back.projectors()[k].matrix() - set.projectors()[k].matrix()), 1e-14);
    EXPECT_EQ(back.labels()[k], set.labels()[k]);
  }
}

TEST(io, set_rejects_non_projectors_and_dim_mismatch) {
  json j = set_to_json(DiscreteSetBundle(2).as_set());
  json bad = j;
  bad["projectors"][0]["entries"][0] = json::array({2.0, 0.0});
  EXPECT_THROW(set_from_json(bad), DegenerateInputError);
  bad = j;
  bad["dim"] = 3;
  EXPECT_THROW(set_from_json(bad), DimensionError);
  bad = j;
  bad.erase("projectors");
  EXPECT_THROW(set_from_json(bad), ParseError);
}

TEST(io, table_and_split_roundtrip) {
  std::mt19937_64 rng(2);
  TomographicSet set = DiscreteSetBundle(2).as_set();
  TomogramTable t = tomogram(set, random_hermitian(2, rng));
  TomogramTable back = table_from_json(parse_json_text(dump_json(table_to_json(t)), "mem"));
  EXPECT_EQ(back.values, t.values);
  EXPECT_EQ(back.labels, t.labels);
  EXPECT_EQ(back.set_id, t.set_id);
  SplitTomogram s = split_tomogram(set, random_matrix(2, rng));
  json sj = parse_json_text(dump_json(split_to_json(s)), "mem");
  EXPECT_TRUE(is_split_table(sj));
  EXPECT_FALSE(is_split_table(table_to_json(t)));
  SplitTomogram sb = split_from_json(sj);
  EXPECT_EQ(sb.antihermitian_part.values, s.antihermitian_part.values);
  sj["values"].erase(0);
  EXPECT_THROW(table_from_json(sj), ParseError);
}

TEST(io, family_parsing) {
  json j = {{"fiducial", matrix_to_json(Mat::Identity(2, 2))},
            {"family", json::array({matrix_to_json(Mat::Identity(2, 2))})}};
  auto [t0, fam] = family_from_json(j);
  EXPECT_EQ(fam.members.size(), 1u);
  EXPECT_EQ(fam.labels.size(), 1u);
  j.erase("family");
  EXPECT_THROW(family_from_json(j), ParseError);
}

TEST(io, parse_errors_carry_position) {
  try {
    parse_json_text("{\n  \"dim\": 2,\n  oops\n}", "in.json");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("in.json:3:"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_json_text("", "empty.json"), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), UsageError);
}

TEST(io, dump_uses_seventeen_digits) {
  const double x = 0.1;
  std::string s = dump_json(json{{"x", x}, {"n", 3}, {"one", 1.0}});
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos) << s;
  EXPECT_NE(s.find("\"n\": 3"), std::string::npos) << s;
  EXPECT_NE(s.find("1.0"), std::string::npos) << s;
  EXPECT_EQ(parse_json_text(s, "mem").at("x").get<double>(), x);
  EXPECT_NE(dump_json(json{{"c", std::numeric_limits<double>::infinity()}}).find("null"),
            std::string::npos);
}
