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

#include <climits>

#include "doctest.h"
#include "pairbound/bounding.hpp"
#include "pairbound/sampling.hpp"
#include "support/harness.hpp"

using namespace pairbound;
using pairbound::testing::lit;
using pairbound::testing::make_input;
using pairbound::testing::strict_bound;

namespace {

const Carrier kAdd = Carrier::integer_add();
const Carrier kRadd = Carrier::rational_add();
const Carrier kMul = Carrier::positive_rational_mul();
const Carrier kLex2 = Carrier::natural_vector_lex_add(2);

SortedInput one_to_six() { return make_input(kAdd, {"1", "2", "3", "4", "5", "6"}); }

BoundingInstance upper(const SortedInput& in, const std::string& n) {
  return BoundingInstance(in, lit(in.carrier(), n), Direction::kUpperStrict);
}

BoundingInstance lower(const SortedInput& in, const std::string& n) {
  return BoundingInstance(in, lit(in.carrier(), n), Direction::kLowerStrict);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("feasible") {
  const auto inst = upper(one_to_six(), "8");
  CHECK(feasible(symmetric_matching(3), inst));
  CHECK_FALSE(feasible(parse_matching("(1,2)(3,4)(5,6)"), inst));

  // Strictness at the boundary: N equal to the smallest pair value.
  for (const Matching& m : enumerate_matchings(3)) {
    const EvaluationRow row = evaluate(m, one_to_six());
    CHECK_FALSE(feasible(m, BoundingInstance(one_to_six(), row.min_value, Direction::kLowerStrict)));
    CHECK_FALSE(feasible(m, BoundingInstance(one_to_six(), row.max_value, Direction::kUpperStrict)));
  }

  CHECK(code_of([&] { feasible(symmetric_matching(2), inst); }) == ErrorCode::kIndexRange);
  CHECK(code_of([&] { BoundingInstance(one_to_six(), lit(kMul, "8"), Direction::kUpperStrict); }) ==
        ErrorCode::kCarrierMismatch);
}

TEST_CASE("theorem_check") {
  const SortedInput in = make_input(kAdd, {"1", "3", "6", "8", "9", "11"});
  const TheoremCheck t = theorem_check(upper(in, "18"), parse_matching("(1,2)(3,6)(4,5)"));
  CHECK(t.holds);
  CHECK(t.symmetric.pair_values ==
        std::vector<Element>{lit(kAdd, "12"), lit(kAdd, "12"), lit(kAdd, "14")});

  const SortedInput mul = make_input(kMul, {"2", "7", "11", "14", "16", "17"});
  CHECK(theorem_check(upper(mul, "155"), symmetric_matching(3)).holds);

  const SortedInput pair = make_input(kAdd, {"4", "9"});
  CHECK(theorem_check(lower(pair, "12"), symmetric_matching(1)).holds);

  CHECK(code_of([&] { theorem_check(upper(in, "17"), parse_matching("(1,2)(3,6)(4,5)")); }) ==
        ErrorCode::kInfeasibleWitness);
}

TEST_CASE("exchange_transform reproduces the hand-executed walk") {
  // Witness values 5, 8, 8 against N = 10.
  const auto inst = upper(one_to_six(), "10");
  const Certificate cert = exchange_transform(parse_matching("(1,4)(2,6)(3,5)"), inst);
  REQUIRE(cert.steps.size() == 2);

  const ExchangeStep& first = cert.steps[0];
  CHECK(first.level == 1);
  CHECK(first.ell == 4);
  CHECK(first.ell_prime == 2);
  CHECK(first.removed == std::array<Pair, 2>{Pair{1, 4}, Pair{2, 6}});
  CHECK(first.inserted == std::array<Pair, 2>{Pair{1, 6}, Pair{2, 4}});
  REQUIRE(first.justifications.size() == 4);
  CHECK(first.justifications[0].lhs == Pair{2, 4});
  CHECK(first.justifications[0].lhs_value == lit(kAdd, "6"));
  CHECK(first.justifications[0].relation == Relation::kLess);
  CHECK_FALSE(first.justifications[0].rhs_pair.has_value());
  CHECK(first.justifications[0].rhs_value == lit(kAdd, "10"));
  // (1,6) = 7 <= (2,6) = 8 < 10
  CHECK(first.justifications[1].lhs == Pair{1, 6});
  CHECK(first.justifications[1].relation == Relation::kLessEqual);
  CHECK(first.justifications[1].rhs_pair == Pair{2, 6});
  CHECK(first.justifications[1].rhs_value == lit(kAdd, "8"));

  const ExchangeStep& second = cert.steps[1];
  CHECK(second.level == 2);
  CHECK(second.removed == std::array<Pair, 2>{Pair{2, 4}, Pair{3, 5}});
  CHECK(second.inserted == std::array<Pair, 2>{Pair{2, 5}, Pair{3, 4}});
  CHECK(second.justifications[0].lhs == Pair{3, 4});
  CHECK(second.justifications[0].lhs_value == lit(kAdd, "7"));

  CHECK(cert.final_matching == symmetric_matching(3));
  CHECK(verify_certificate(cert));
}

TEST_CASE("exchange_transform on symmetric or infeasible witnesses") {
  const auto inst = upper(one_to_six(), "8");
  const Certificate cert = exchange_transform(symmetric_matching(3), inst);
  CHECK(cert.steps.empty());
  CHECK(verify_certificate(cert));
  CHECK(code_of([&] { exchange_transform(parse_matching("(1,2)(3,4)(5,6)"), inst); }) ==
        ErrorCode::kInfeasibleWitness);
  CHECK(code_of([&] { exchange_transform(symmetric_matching(2), inst); }) == ErrorCode::kIndexRange);
}

TEST_CASE("exchange_transform certifies every feasible witness for n <= 6") {
  Rng rng(11);
  for (const Carrier& c : {kAdd, kMul, kLex2, kRadd}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      CAPTURE(c.name());
      CAPTURE(n);
      const SortedInput in = SortedInput::sort(sample_multiset(c, 2 * n, rng));
      const auto all = enumerate_matchings(n);
      std::size_t certified = 0;
      for (const Matching& m : all) {
        const EvaluationRow row = evaluate(m, in);
        for (Direction d : {Direction::kUpperStrict, Direction::kLowerStrict}) {
          const Element& extreme = d == Direction::kUpperStrict ? row.max_value : row.min_value;
          const auto bound = strict_bound(in, extreme, d);
          if (!bound) continue;
          const BoundingInstance inst(in, *bound, d);
          REQUIRE(feasible(m, inst));
          const Certificate cert = exchange_transform(m, inst);
          CHECK(cert.steps.size() <= n - 1);
          CHECK(cert.final_matching == symmetric_matching(n));
          const VerificationResult v = verify_certificate(cert);
          CHECK_MESSAGE(v.valid, v.reason);
          ++certified;
        }
      }
      CHECK(certified > 0);
    }
  }
}

TEST_CASE("lower bounding mirrors the upper walk") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const SortedInput in = SortedInput::sort(sample_multiset(kAdd, 8, rng));
    for (const Matching& m : enumerate_matchings(4)) {
      const EvaluationRow row = evaluate(m, in);
      const Certificate up = exchange_transform(
          m, BoundingInstance(in, *strict_bound(in, row.max_value, Direction::kUpperStrict),
                              Direction::kUpperStrict));
      const Certificate down = exchange_transform(
          m, BoundingInstance(in, *strict_bound(in, row.min_value, Direction::kLowerStrict),
                              Direction::kLowerStrict));
      REQUIRE(up.steps.size() == down.steps.size());
      for (std::size_t k = 0; k < up.steps.size(); ++k) {
        const ExchangeStep& u = up.steps[k];
        const ExchangeStep& l = down.steps[k];
        CHECK(u.level == l.level);
        CHECK(u.ell == l.ell);
        CHECK(u.ell_prime == l.ell_prime);
        CHECK(u.removed == l.removed);
        CHECK(u.inserted == l.inserted);
        REQUIRE(u.justifications.size() == l.justifications.size());
        for (std::size_t j = 0; j < u.justifications.size(); ++j) {
          const Relation ur = u.justifications[j].relation;
          const Relation lr = l.justifications[j].relation;
          CHECK(lr == (ur == Relation::kLess        ? Relation::kGreater
                       : ur == Relation::kLessEqual ? Relation::kGreaterEqual
                                                    : ur));
          // The third link goes through (r, ell) in the lower chain.
          if (j != 2) CHECK(u.justifications[j].lhs == l.justifications[j].lhs);
        }
        CHECK(l.justifications[2].lhs == Pair{l.level, l.ell});
        CHECK(u.justifications[2].lhs == Pair{u.ell_prime, 2 * in.n() + 1 - u.level});
      }
    }
  }
}

TEST_CASE("verify_certificate rejects tampering") {
  const auto inst = upper(one_to_six(), "10");
  const Certificate good = exchange_transform(parse_matching("(1,4)(2,6)(3,5)"), inst);
  REQUIRE(verify_certificate(good));

  SUBCASE("justification value") {
    Certificate bad = good;
    bad.steps[0].justifications[0].lhs_value = lit(kAdd, "5");
    const VerificationResult v = verify_certificate(bad);
    CHECK_FALSE(v.valid);
    CHECK(v.reason.find("justification mismatch") != std::string::npos);
  }
  SUBCASE("non-symmetric final matching") {
    Certificate bad = good;
    bad.final_matching = parse_matching("(1,6)(2,4)(3,5)");
    CHECK_FALSE(verify_certificate(bad));
  }
  SUBCASE("removed pair index") {
    Certificate bad = good;
    bad.steps[0].removed[1] = Pair{3, 6};
    CHECK_FALSE(verify_certificate(bad));
  }
  SUBCASE("relation") {
    Certificate bad = good;
    bad.steps[1].justifications[1].relation = Relation::kLess;
    CHECK_FALSE(verify_certificate(bad));
  }
  SUBCASE("bound") {
    Certificate bad{BoundingInstance(one_to_six(), lit(kAdd, "11"), Direction::kUpperStrict),
                    good.witness, good.steps, good.final_matching};
    CHECK_FALSE(verify_certificate(bad));
  }
  SUBCASE("infeasible witness") {
    Certificate bad{BoundingInstance(one_to_six(), lit(kAdd, "8"), Direction::kUpperStrict),
                    good.witness, good.steps, good.final_matching};
    CHECK(verify_certificate(bad).reason == "witness is not feasible");
  }
  SUBCASE("dropped step") {
    Certificate bad = good;
    bad.steps.pop_back();
    CHECK_FALSE(verify_certificate(bad));
  }
  SUBCASE("reordered steps") {
    Certificate bad = good;
    std::swap(bad.steps[0], bad.steps[1]);
    CHECK_FALSE(verify_certificate(bad));
  }
}

TEST_CASE("a flipped justification relation is a structure mismatch") {
  const auto inst = upper(one_to_six(), "10");
  Certificate cert = exchange_transform(parse_matching("(1,4)(2,6)(3,5)"), inst);
  cert.steps[0].justifications[2].relation = Relation::kGreater;
  CHECK(verify_certificate(cert).reason.find("structure") != std::string::npos);
}

TEST_CASE("minimax and maximin oracles") {
  CHECK(minimax_matching(one_to_six()).value == lit(kAdd, "7"));
  CHECK(minimax_matching(one_to_six()).scanned == 15);

  const SortedInput mul = make_input(kMul, {"1", "3", "6", "8", "9", "11"});
  CHECK(minimax_matching(mul).value == lit(kMul, "48"));

  const SortedInput add2 = make_input(kAdd, {"2", "7", "11", "14", "16", "17"});
  const OracleResult best = maximin_matching(add2);
  CHECK(best.value == lit(kAdd, "19"));
  // Rows 14 and 15 tie at 19; the earlier one wins.
  CHECK(best.matching.to_string() == "(1,6)(2,4)(3,5)");

  const SortedInput mul2 = make_input(kMul, {"1", "2", "3", "4", "5", "6"});
  CHECK(maximin_matching(mul2).value == lit(kMul, "6"));

  const SortedInput single = make_input(kMul, {"3", "5/2"});
  CHECK(minimax_matching(single).value == lit(kMul, "15/2"));
  CHECK(maximin_matching(single).value == lit(kMul, "15/2"));
}

TEST_CASE("oracle ties go to the earliest matching, serial or parallel") {
  Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Element> raw(12, lit(kAdd, "0"));
    for (auto& e : raw) e = Element::integer(std::uniform_int_distribution<int>(0, 3)(rng));
    const SortedInput in = SortedInput::sort(raw);
    const OracleResult serial = minimax_matching(in, {.cap = 8, .parallel = false});
    const OracleResult parallel = minimax_matching(in, {.cap = 8, .parallel = true});
    CHECK(serial.matching == parallel.matching);
    CHECK(serial.value == parallel.value);
    CHECK(serial.scanned == 10395);

    // Earliest winner in stream order, found independently.
    std::optional<Matching> first;
    for (const Matching& m : enumerate_matchings(6)) {
      if (evaluate(m, in).max_value == serial.value) {
        first = m;
        break;
      }
    }
    CHECK(first == serial.matching);

    const OracleResult hi_serial = maximin_matching(in, {.cap = 8, .parallel = false});
    const OracleResult hi_parallel = maximin_matching(in, {.cap = 8, .parallel = true});
    CHECK(hi_serial.matching == hi_parallel.matching);
  }
}

TEST_CASE("exhaustive cap") {
  std::vector<std::string> lits;
  for (int k = 0; k < 18; ++k) lits.push_back(std::to_string(k));
  const SortedInput in = make_input(kAdd, lits);
  CHECK(code_of([&] { minimax_matching(in); }) == ErrorCode::kCapExceeded);
  CHECK(code_of([&] { optimality_report(in, {.cap = 4}); }) == ErrorCode::kCapExceeded);
}

TEST_CASE("optimality_report") {
  const SortedInput a = make_input(kAdd, {"1", "3", "6", "8", "9", "11"});
  const OptimalityReport r = optimality_report(a);
  CHECK(r.passed());
  CHECK(r.symmetric.max_value == lit(kAdd, "14"));
  CHECK(r.minimax.value == lit(kAdd, "14"));
  CHECK(r.symmetric.min_value == lit(kAdd, "12"));
  CHECK(r.maximin.value == lit(kAdd, "12"));

  const SortedInput m = make_input(kMul, {"2", "7", "11", "14", "16", "17"});
  const OptimalityReport rm = optimality_report(m);
  CHECK(rm.passed());
  CHECK(rm.minimax.value == lit(kMul, "154"));
  CHECK(rm.maximin.value == lit(kMul, "34"));

  const SortedInput flat = make_input(kLex2, {"(1,1)", "(1,1)", "(1,1)", "(1,1)"});
  const OptimalityReport rf = optimality_report(flat);
  CHECK(rf.passed());
  CHECK(rf.symmetric.max_value == rf.symmetric.min_value);
}

TEST_CASE("corollary form against a plain-integer oracle") {
  // Independent check: minimax and maximin over raw pair partitions with
  // 64-bit arithmetic.
  Rng rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<long> values;
    std::vector<Element> raw;
    for (int k = 0; k < 2 * n; ++k) {
      values.push_back(std::uniform_int_distribution<long>(-30, 30)(rng));
      raw.push_back(Element::integer(values.back()));
    }
    std::sort(values.begin(), values.end());
    long best_max = LONG_MAX;
    long best_min = LONG_MIN;
    for (const auto& pairs : pairbound::testing::brute_force_matchings(n)) {
      long hi = LONG_MIN;
      long lo = LONG_MAX;
      for (auto [i, j] : pairs) {
        hi = std::max(hi, values[i - 1] + values[j - 1]);
        lo = std::min(lo, values[i - 1] + values[j - 1]);
      }
      best_max = std::min(best_max, hi);
      best_min = std::max(best_min, lo);
    }
    const OptimalityReport r = optimality_report(SortedInput::sort(raw));
    CHECK(r.passed());
    CHECK(r.symmetric.max_value == Element::integer(best_max));
    CHECK(r.symmetric.min_value == Element::integer(best_min));
  }
}
