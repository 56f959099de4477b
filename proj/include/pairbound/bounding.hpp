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

// Upper and lower bounding for pairings of a sorted input.
//
// For a_1 <= ... <= a_2n in a totally ordered commutative semigroup and a
// bound N: if some perfect matching has every pair value strictly below N,
// then so does the symmetric matching (a_1, a_2n), (a_2, a_2n-1), ...,
// (a_n, a_n+1). Dually for "strictly above".
//
// exchange_transform makes this constructive. It walks levels r = 1..n over
// the shrinking range {r, ..., 2n+1-r}. When (r, 2n+1-r) is already a pair,
// nothing happens. Otherwise, with l the partner of r and l' the partner of
// 2n+1-r, the pairs (r, l) and (l', 2n+1-r) are replaced by (r, 2n+1-r) and
// (l, l'). Every step records the inequalities that make it sound, and
// verify_certificate re-derives all of them from scratch.

#ifndef PAIRBOUND_BOUNDING_HPP_
#define PAIRBOUND_BOUNDING_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairbound/matching.hpp"
#include "pairbound/semigroup.hpp"

namespace pairbound {

enum class Direction {
  kUpperStrict,  // every pair value < N
  kLowerStrict,  // every pair value > N
};

std::string_view to_string(Direction d) noexcept;  // "upper" / "lower"
Direction parse_direction(std::string_view text);

enum class Relation { kLess, kLessEqual, kGreater, kGreaterEqual };

std::string_view to_string(Relation r) noexcept;  // "<", "<=", ">", ">="
Relation parse_relation(std::string_view text);
bool holds(const Element& lhs, Relation r, const Element& rhs);

class BoundingInstance {
 public:
  // Throws kCarrierMismatch if the bound is from another carrier.
  BoundingInstance(SortedInput input, Element bound, Direction direction);

  const SortedInput& input() const noexcept { return input_; }
  const Element& bound() const noexcept { return bound_; }
  Direction direction() const noexcept { return direction_; }
  std::size_t n() const noexcept { return input_.n(); }

  // The strict relation of pair values to the bound.
  Relation strict_relation() const noexcept;
  bool satisfied_by(const Element& pair_value) const;

  friend bool operator==(const BoundingInstance&, const BoundingInstance&) = default;

 private:
  SortedInput input_;
  Element bound_;
  Direction direction_;
};

bool feasible(const Matching& m, const BoundingInstance& inst);

struct TheoremCheck {
  bool holds = false;  // false means a theorem violation, never expected
  EvaluationRow symmetric;
};

// Requires a feasible witness (kInfeasibleWitness otherwise) and reports the
// feasibility of the symmetric matching.
TheoremCheck theorem_check(const BoundingInstance& inst, const Matching& witness);

// lhs (relation) rhs, where lhs is a pair value and rhs is either the bound N
// (rhs_pair empty) or another pair value.
struct Justification {
  Pair lhs;
  Element lhs_value;
  Relation relation;
  std::optional<Pair> rhs_pair;
  Element rhs_value;

  friend bool operator==(const Justification&, const Justification&) = default;
};

struct ExchangeStep {
  std::size_t level = 0;
  Index ell = 0;        // partner of `level` before the step
  Index ell_prime = 0;  // partner of 2n+1-level before the step
  std::array<Pair, 2> removed;
  std::array<Pair, 2> inserted;
  std::vector<Justification> justifications;

  friend bool operator==(const ExchangeStep&, const ExchangeStep&) = default;
};

struct Certificate {
  BoundingInstance instance;
  Matching witness;
  std::vector<ExchangeStep> steps;
  Matching final_matching;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Throws kInfeasibleWitness if the witness is not feasible, and
// TheoremViolation (with a state dump) if a recorded justification fails.
Certificate exchange_transform(const Matching& witness, const BoundingInstance& inst);

// The justification list a step at `level` with the given partners must carry,
// with values computed from the instance. Shared by producer and verifier.
//
// For upper bounding, with hi = 2n+1-r:
//   (l, l') < N                       the inserted pair stays feasible
//   (r, hi) <= (l', hi)               monotonicity, a_r <= a_l'
//   (l', hi) < N                      feasibility of the removed pair
//   (r, hi) < N                       the settled symmetric pair
// For lower bounding the middle link runs through (r, l) instead, since
// a_hi >= a_l gives (r, hi) >= (r, l) > N.
std::vector<Justification> expected_justifications(const BoundingInstance& inst,
                                                   std::size_t level, Index ell,
                                                   Index ell_prime);

struct VerificationResult {
  bool valid = false;
  std::string reason;  // first failure; empty when valid

  explicit operator bool() const noexcept { return valid; }
};

// Recomputes every pair value and comparison; stored values are never
// trusted. Total: returns a reason instead of throwing.
VerificationResult verify_certificate(const Certificate& cert);

struct OracleOptions {
  std::size_t cap = 8;  // largest n scanned exhaustively
  bool parallel = true;
};

struct OracleResult {
  Matching matching;
  Element value;
  BigInt scanned;
};

// Brute force over every matching: minimize the largest pair value. Ties go
// to the earliest matching in enumeration order, serial or parallel. Throws
// kCapExceeded for n above options.cap.
OracleResult minimax_matching(const SortedInput& input, const OracleOptions& options = {});
// Same, maximizing the smallest pair value.
OracleResult maximin_matching(const SortedInput& input, const OracleOptions& options = {});

struct OptimalityReport {
  EvaluationRow symmetric;
  OracleResult minimax;
  OracleResult maximin;
  bool minimax_agrees = false;
  bool maximin_agrees = false;

  bool passed() const noexcept { return minimax_agrees && maximin_agrees; }
};

OptimalityReport optimality_report(const SortedInput& input, const OracleOptions& options = {});

}  // namespace pairbound

#endif  // PAIRBOUND_BOUNDING_HPP_
