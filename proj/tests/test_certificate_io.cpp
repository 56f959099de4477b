// Copyright 2026 The pairbound Authors.
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

#include "doctest.h"
#include "pairbound/certificate_io.hpp"
#include "pairbound/sampling.hpp"
#include "support/harness.hpp"

using namespace pairbound;
using pairbound::testing::lit;
using pairbound::testing::make_input;

namespace {

Certificate sample_certificate() {
  const SortedInput in = make_input(Carrier::integer_add(), {"1", "2", "3", "4", "5", "6"});
  return exchange_transform(parse_matching("(1,4)(2,6)(3,5)"),
                            BoundingInstance(in, lit(in.carrier(), "10"), Direction::kUpperStrict));
}

}  // namespace

TEST_CASE("certificate document layout") {
  const std::string json = certificate_to_json(sample_certificate());
  CHECK(json.starts_with("{\n  \"instance\": {\n    \"carrier\": \"add\",\n"));
  CHECK(json.find("\"witness\": \"(1,4)(2,6)(3,5)\"") != std::string::npos);
  CHECK(json.find("\"final\": \"(1,6)(2,5)(3,4)\"") != std::string::npos);
  CHECK(json.find("\"removed\": [\n        \"(1,4)\",\n        \"(2,6)\"\n      ]") !=
        std::string::npos);
  CHECK(json.find("\"rhs\": \"N\"") != std::string::npos);
  // Keys stay in insertion order so output is diffable.
  CHECK(json.find("\"instance\"") < json.find("\"witness\""));
  CHECK(json.find("\"witness\"") < json.find("\"steps\""));
  CHECK(json.find("\"steps\"") < json.find("\"final\""));
  CHECK(json.back() == '\n');
}

TEST_CASE("certificates survive a JSON round trip on every carrier") {
  Rng rng(17);
  for (const Carrier& c : {Carrier::integer_add(), Carrier::rational_add(),
                           Carrier::positive_rational_mul(), Carrier::natural_vector_lex_add(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const SortedInput in = SortedInput::sort(sample_multiset(c, 8, rng));
      const auto all = enumerate_matchings(4);
      const Matching& m = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      const EvaluationRow row = evaluate(m, in);
      const auto bound = pairbound::testing::strict_bound(in, row.max_value, Direction::kUpperStrict);
      const Certificate cert =
          exchange_transform(m, BoundingInstance(in, *bound, Direction::kUpperStrict));
      const std::string text = certificate_to_json(cert);
      const Certificate back = certificate_from_json(text);
      CHECK(back == cert);
      CHECK(certificate_to_json(back) == text);
      CHECK(verify_certificate(back));
    }
  }
}

TEST_CASE("malformed certificate documents") {
  auto code_of = [](const std::string& text) {
    try {
      certificate_from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of("not json") == ErrorCode::kParse);
  CHECK(code_of("{}") == ErrorCode::kParse);

  std::string good = certificate_to_json(sample_certificate());
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK(code_of(replaced("\"add\"", "\"max\"")) == ErrorCode::kParse);
  CHECK(code_of(replaced("\"upper\"", "\"sideways\"")) == ErrorCode::kParse);
  CHECK(code_of(replaced("\"level\": 1", "\"level\": -1")) == ErrorCode::kParse);
  CHECK(code_of(replaced("\"1\",\n      \"2\"", "\"2\",\n      \"1\"")) == ErrorCode::kParse);
  CHECK(code_of(replaced("\"(1,4)(2,6)(3,5)\"", "\"(1,4)(2,6)\"")) == ErrorCode::kParse);
  CHECK(code_of(replaced("\"lhs_value\": \"6\"", "\"lhs_value\": 6")) == ErrorCode::kParse);

  // Well-formed but wrong: parsing succeeds, verification fails.
  const Certificate tampered = certificate_from_json(replaced("\"lhs_value\": \"6\"", "\"lhs_value\": \"5\""));
  CHECK_FALSE(verify_certificate(tampered));
}
