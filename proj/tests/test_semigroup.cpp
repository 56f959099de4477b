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
#include "pairbound/sampling.hpp"
#include "pairbound/semigroup.hpp"
#include "support/harness.hpp"

using namespace pairbound;
using pairbound::testing::lit;

namespace {

const Carrier kAdd = Carrier::integer_add();
const Carrier kRadd = Carrier::rational_add();
const Carrier kMul = Carrier::positive_rational_mul();
const Carrier kLex2 = Carrier::natural_vector_lex_add(2);
const Carrier kLex3 = Carrier::natural_vector_lex_add(3);

}  // namespace

TEST_CASE("combine on the built-in carriers") {
  CHECK(combine(lit(kAdd, "1"), lit(kAdd, "6")) == lit(kAdd, "7"));
  CHECK(combine(lit(kMul, "11"), lit(kMul, "14")) == lit(kMul, "154"));
  CHECK(combine(lit(kLex2, "(0,0)"), lit(kLex2, "(3,5)")) == lit(kLex2, "(3,5)"));
  CHECK(combine(lit(kRadd, "1/2"), lit(kRadd, "1/3")).to_string() == "5/6");
  CHECK(combine(lit(kMul, "2/3"), lit(kMul, "3/4")).to_string() == "1/2");
  CHECK(combine(lit(kAdd, "-5"), lit(kAdd, "3")).to_string() == "-2");
}

TEST_CASE("combine is exact past 64 bits") {
  const Element big = lit(kAdd, "18446744073709551615");
  CHECK(combine(big, big).to_string() == "36893488147419103230");
  const Element m = lit(kMul, "18446744073709551616");
  CHECK(combine(m, m).to_string() == "340282366920938463463374607431768211456");
}

TEST_CASE("combine rejects carrier mismatches") {
  try {
    combine(lit(kAdd, "1"), lit(kMul, "1"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCarrierMismatch);
  }
  CHECK_THROWS_AS(combine(lit(kLex2, "(1,2)"), lit(kLex3, "(1,2,3)")), Error);
}

TEST_CASE("compare") {
  CHECK(compare(lit(kAdd, "3"), lit(kAdd, "7")) == std::strong_ordering::less);
  CHECK(compare(lit(kLex2, "(1,9)"), lit(kLex2, "(2,0)")) == std::strong_ordering::less);
  CHECK(compare(lit(kMul, "1/2"), lit(kMul, "1/2")) == std::strong_ordering::equal);
  CHECK(compare(lit(kMul, "2/4"), lit(kMul, "1/2")) == std::strong_ordering::equal);
  CHECK(compare(lit(kLex3, "(1,0,5)"), lit(kLex3, "(1,0,4)")) == std::strong_ordering::greater);
  CHECK_THROWS_AS(compare(lit(kAdd, "1"), lit(kRadd, "1")), Error);
}

TEST_CASE("element domains are checked at construction") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of([] { parse_element(kMul, "0"); }) == ErrorCode::kDomainViolation);
  CHECK(code_of([] { parse_element(kMul, "-3/4"); }) == ErrorCode::kDomainViolation);
  CHECK(code_of([] { parse_element(kLex2, "(1,-1)"); }) == ErrorCode::kDomainViolation);
  CHECK(code_of([] { parse_element(kLex2, "(1,2,3)"); }) == ErrorCode::kCarrierMismatch);
  CHECK(code_of([] { parse_element(kAdd, "1.5"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_element(kRadd, "1/0"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_element(kAdd, ""); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_element(kLex2, "1,2"); }) == ErrorCode::kParse);
  CHECK_THROWS_AS(Carrier::natural_vector_lex_add(0), Error);
}

TEST_CASE("literal forms") {
  CHECK(lit(kAdd, "+12").to_string() == "12");
  CHECK(lit(kAdd, " -7 ").to_string() == "-7");
  CHECK(lit(kRadd, "6/4").to_string() == "3/2");
  CHECK(lit(kRadd, "-2.25").to_string() == "-9/4");
  CHECK(lit(kMul, "0.5").to_string() == "1/2");
  CHECK(lit(kMul, "8/4").to_string() == "2");
  CHECK(lit(kLex3, "( 1, 0 ,2)").to_string() == "(1,0,2)");
}

TEST_CASE("printed elements re-parse to equal values") {
  Rng rng(7);
  for (const Carrier& c : {kAdd, kRadd, kMul, kLex3}) {
    for (int k = 0; k < 200; ++k) {
      const Element e = sample_element(c, rng);
      CHECK(parse_element(c, e.to_string()) == e);
    }
  }
}

TEST_CASE("carrier names") {
  CHECK(Carrier::from_name("add") == kAdd);
  CHECK(Carrier::from_name("lexadd", 2) == kLex2);
  CHECK(Carrier::from_name("lexadd:3") == kLex3);
  CHECK(kLex3.name() == "lexadd:3");
  CHECK(Carrier::from_name(kMul.name()) == kMul);
  CHECK_THROWS_AS(Carrier::from_name("max"), Error);
  CHECK_THROWS_AS(Carrier::from_name("lexadd"), Error);
}

TEST_CASE("monotonicity law on explicit quadruples") {
  const std::vector<Quadruple> ok = {{lit(kAdd, "1"), lit(kAdd, "2"), lit(kAdd, "3"), lit(kAdd, "4")}};
  CHECK(check_monotonicity_law(kAdd, ok).empty());

  const std::vector<Quadruple> unordered = {
      {lit(kAdd, "2"), lit(kAdd, "1"), lit(kAdd, "3"), lit(kAdd, "4")}};
  CHECK_THROWS_AS(check_monotonicity_law(kAdd, unordered), Error);

  const std::vector<Quadruple> mixed = {{lit(kAdd, "1"), lit(kAdd, "2"), lit(kAdd, "3"), lit(kAdd, "4")}};
  CHECK_THROWS_AS(check_monotonicity_law(kMul, mixed), Error);
}

TEST_CASE("monotonicity law holds on sampled quadruples") {
  for (const Carrier& c : {kMul, kLex3, kAdd, kRadd}) {
    Rng rng(500 + c.dim());
    std::vector<Quadruple> samples;
    for (int k = 0; k < 500; ++k) samples.push_back(sample_quadruple(c, rng));
    // Direct check, independent of check_monotonicity_law.
    std::size_t direct = 0;
    for (const Quadruple& q : samples) {
      if (compare(combine(q.alpha, q.gamma), combine(q.beta, q.delta)) > 0) ++direct;
    }
    CHECK(direct == 0);
    CHECK(check_monotonicity_law(c, samples).empty());
  }
}

TEST_CASE("sampled laws report no violations") {
  for (const Carrier& c : {kAdd, kRadd, kMul, kLex2, kLex3}) {
    const LawReport r = run_law_checks(c, 1000, 42);
    CAPTURE(c.name());
    CHECK(r.ok());
    CHECK(r.samples == 1000);
  }
  CHECK(run_law_checks(kAdd, 10, 1).shift_checked);
  CHECK_FALSE(run_law_checks(kMul, 10, 1).shift_checked);
}

TEST_CASE("integer shift keeps order and combine") {
  Rng rng(99);
  for (int k = 0; k < 300; ++k) {
    const Element a = sample_element(kAdd, rng);
    const Element b = sample_element(kAdd, rng);
    const Element c = sample_element(kAdd, rng);
    const Element ac = combine(a, c);
    const Element bc = combine(b, c);
    CHECK(compare(a, b) == compare(ac, bc));
    CHECK(combine(ac, bc) == Element::integer((a.as_integer() + b.as_integer()) + 2 * c.as_integer()));
  }
}
