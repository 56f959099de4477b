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

#include "pairbound/bounding.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace pairbound {

std::string_view to_string(Direction d) noexcept {
  return d == Direction::kUpperStrict ? "upper" : "lower";
}

Direction parse_direction(std::string_view text) {
  if (text == "upper") return Direction::kUpperStrict;
  if (text == "lower") return Direction::kLowerStrict;
  throw Error(ErrorCode::kParse, "direction must be 'upper' or 'lower', got '" + std::string(text) + "'");
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::kLess: return "<";
    case Relation::kLessEqual: return "<=";
    case Relation::kGreater: return ">";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "<") return Relation::kLess;
  if (text == "<=") return Relation::kLessEqual;
  if (text == ">") return Relation::kGreater;
  if (text == ">=") return Relation::kGreaterEqual;
  throw Error(ErrorCode::kParse, "unknown relation '" + std::string(text) + "'");
}

bool holds(const Element& lhs, Relation r, const Element& rhs) {
  const auto c = compare(lhs, rhs);
  switch (r) {
    case Relation::kLess: return c < 0;
    case Relation::kLessEqual: return c <= 0;
    case Relation::kGreater: return c > 0;
    case Relation::kGreaterEqual: return c >= 0;
  }
  return false;
}

BoundingInstance::BoundingInstance(SortedInput input, Element bound, Direction direction)
    : input_(std::move(input)), bound_(std::move(bound)), direction_(direction) {
  if (bound_.carrier() != input_.carrier()) {
    throw Error(ErrorCode::kCarrierMismatch,
                "bound is from carrier " + bound_.carrier().name() + ", input from " +
                    input_.carrier().name());
  }
}

Relation BoundingInstance::strict_relation() const noexcept {
  return direction_ == Direction::kUpperStrict ? Relation::kLess : Relation::kGreater;
}

bool BoundingInstance::satisfied_by(const Element& pair_value) const {
  return holds(pair_value, strict_relation(), bound_);
}

bool feasible(const Matching& m, const BoundingInstance& inst) {
  const EvaluationRow row = evaluate(m, inst.input());
  return std::all_of(row.pair_values.begin(), row.pair_values.end(),
                     [&](const Element& v) { return inst.satisfied_by(v); });
}

TheoremCheck theorem_check(const BoundingInstance& inst, const Matching& witness) {
  if (!feasible(witness, inst)) {
    throw Error(ErrorCode::kInfeasibleWitness,
                "witness " + witness.to_string() + " is not feasible for bound " +
                    inst.bound().to_string() + " (" + std::string(to_string(inst.direction())) + ")");
  }
  EvaluationRow sym = evaluate(symmetric_matching(inst.n()), inst.input());
  const bool ok = std::all_of(sym.pair_values.begin(), sym.pair_values.end(),
                              [&](const Element& v) { return inst.satisfied_by(v); });
  return TheoremCheck{ok, std::move(sym)};
}

namespace {

Element pair_value(const SortedInput& input, const Pair& p) {
  return combine(input.at(p.first), input.at(p.second));
}

Pair ordered(Index a, Index b) { return a < b ? Pair{a, b} : Pair{b, a}; }

Justification against_bound(const BoundingInstance& inst, const Pair& p) {
  return Justification{p, pair_value(inst.input(), p), inst.strict_relation(), std::nullopt,
                       inst.bound()};
}

Justification against_pair(const BoundingInstance& inst, const Pair& lhs, Relation r,
                           const Pair& rhs) {
  return Justification{lhs, pair_value(inst.input(), lhs), r, rhs, pair_value(inst.input(), rhs)};
}

std::string describe(const Justification& j) {
  std::string rhs = j.rhs_pair ? j.rhs_pair->to_string() + "=" + j.rhs_value.to_string()
                               : "N=" + j.rhs_value.to_string();
  return j.lhs.to_string() + "=" + j.lhs_value.to_string() + " " +
         std::string(to_string(j.relation)) + " " + rhs;
}

std::string dump_state(const BoundingInstance& inst, const Matching& current,
                       std::size_t level, Index ell, Index ell_prime) {
  std::ostringstream os;
  os << "carrier: " << inst.input().carrier().name() << "\n"
     << "direction: " << to_string(inst.direction()) << "\n"
     << "bound: " << inst.bound().to_string() << "\n"
     << "elements:";
  for (const Element& e : inst.input().elements()) os << ' ' << e.to_string();
  os << "\ncurrent: " << current.to_string() << "\n"
     << "level: " << level << " ell: " << ell << " ell_prime: " << ell_prime << "\n";
  return os.str();
}

}  // namespace

std::vector<Justification> expected_justifications(const BoundingInstance& inst,
                                                   std::size_t level, Index ell,
                                                   Index ell_prime) {
  const Index hi = 2 * inst.n() + 1 - level;
  const Pair settled{level, hi};
  const Pair inserted = ordered(ell, ell_prime);
  std::vector<Justification> out;
  out.reserve(4);
  out.push_back(against_bound(inst, inserted));
  if (inst.direction() == Direction::kUpperStrict) {
    const Pair link{ell_prime, hi};
    out.push_back(against_pair(inst, settled, Relation::kLessEqual, link));
    out.push_back(against_bound(inst, link));
  } else {
    const Pair link{level, ell};
    out.push_back(against_pair(inst, settled, Relation::kGreaterEqual, link));
    out.push_back(against_bound(inst, link));
  }
  out.push_back(against_bound(inst, settled));
  return out;
}

Certificate exchange_transform(const Matching& witness, const BoundingInstance& inst) {
  const std::size_t n = inst.n();
  if (witness.n() != n) {
    throw Error(ErrorCode::kIndexRange, "witness size does not match the input");
  }
  if (!feasible(witness, inst)) {
    throw Error(ErrorCode::kInfeasibleWitness,
                "witness " + witness.to_string() + " is not feasible for bound " +
                    inst.bound().to_string() + " (" + std::string(to_string(inst.direction())) + ")");
  }

  Matching current = witness;
  std::vector<ExchangeStep> steps;
  for (std::size_t r = 1; r <= n; ++r) {
    const Index hi = 2 * n + 1 - r;
    if (current.contains({r, hi})) continue;

    ExchangeStep step;
    step.level = r;
    step.ell = current.partner_of(r);
    step.ell_prime = current.partner_of(hi);
    step.removed = {Pair{r, step.ell}, Pair{step.ell_prime, hi}};
    step.inserted = {Pair{r, hi}, ordered(step.ell, step.ell_prime)};
    step.justifications = expected_justifications(inst, r, step.ell, step.ell_prime);
    for (const Justification& j : step.justifications) {
      if (!holds(j.lhs_value, j.relation, j.rhs_value)) {
        throw TheoremViolation("justification failed: " + describe(j),
                               dump_state(inst, current, r, step.ell, step.ell_prime));
      }
    }
    current = current.exchange(step.removed, step.inserted);
    if (!feasible(current, inst)) {
      throw TheoremViolation("intermediate matching " + current.to_string() + " is infeasible",
                             dump_state(inst, current, r, step.ell, step.ell_prime));
    }
    steps.push_back(std::move(step));
  }
  if (current != symmetric_matching(n)) {
    throw TheoremViolation("exchange walk ended off the symmetric matching",
                           dump_state(inst, current, n, 0, 0));
  }
  return Certificate{inst, witness, std::move(steps), std::move(current)};
}

VerificationResult verify_certificate(const Certificate& cert) {
  auto fail = [](std::string reason) { return VerificationResult{false, std::move(reason)}; };
  try {
    const BoundingInstance& inst = cert.instance;
    const std::size_t n = inst.n();
    const auto elements = inst.input().elements();
    for (std::size_t k = 1; k < elements.size(); ++k) {
      if (compare(elements[k - 1], elements[k]) > 0) return fail("input is not sorted");
    }
    if (cert.witness.n() != n) return fail("witness size does not match the input");
    if (cert.final_matching.n() != n) return fail("final matching size does not match the input");
    if (!feasible(cert.witness, inst)) return fail("witness is not feasible");
    if (cert.steps.size() >= n) return fail("more than n-1 steps");

    Matching current = cert.witness;
    std::size_t previous_level = 0;
    for (const ExchangeStep& step : cert.steps) {
      const std::string at = "step at level " + std::to_string(step.level) + ": ";
      const std::size_t r = step.level;
      if (r <= previous_level || r < 1 || r > n) return fail(at + "level out of order");
      previous_level = r;
      const Index hi = 2 * n + 1 - r;
      for (Index k = 1; k < r; ++k) {
        if (!current.contains({k, 2 * n + 1 - k})) return fail(at + "outer levels not settled");
      }
      if (current.contains({r, hi})) return fail(at + "symmetric pair already present");
      const Index ell = step.ell;
      const Index ell_prime = step.ell_prime;
      if (!(r < ell && ell < hi && r < ell_prime && ell_prime < hi && ell != ell_prime)) {
        return fail(at + "ell/ell_prime outside the active range");
      }
      if (step.removed != std::array<Pair, 2>{Pair{r, ell}, Pair{ell_prime, hi}}) {
        return fail(at + "removed pairs inconsistent with ell/ell_prime");
      }
      if (step.inserted != std::array<Pair, 2>{Pair{r, hi}, ordered(ell, ell_prime)}) {
        return fail(at + "inserted pairs inconsistent with ell/ell_prime");
      }
      for (const Pair& p : step.removed) {
        if (!current.contains(p)) return fail(at + "removed pair " + p.to_string() + " absent");
      }
      for (const Pair& p : step.inserted) {
        if (current.contains(p)) return fail(at + "inserted pair " + p.to_string() + " already present");
      }

      const auto expected = expected_justifications(inst, r, ell, ell_prime);
      if (expected.size() != step.justifications.size()) {
        return fail(at + "justification structure mismatch");
      }
      for (std::size_t k = 0; k < expected.size(); ++k) {
        const Justification& want = expected[k];
        const Justification& got = step.justifications[k];
        if (want.lhs != got.lhs || want.relation != got.relation || want.rhs_pair != got.rhs_pair) {
          return fail(at + "justification structure mismatch");
        }
        if (want.lhs_value != got.lhs_value || want.rhs_value != got.rhs_value) {
          return fail(at + "justification mismatch: recorded " + describe(got) + ", recomputed " +
                      describe(want));
        }
        if (!holds(want.lhs_value, want.relation, want.rhs_value)) {
          return fail(at + "justification does not hold: " + describe(want));
        }
      }
      current = current.exchange(step.removed, step.inserted);
      if (!feasible(current, inst)) {
        return fail(at + "intermediate matching " + current.to_string() + " is infeasible");
      }
    }
    if (current != cert.final_matching) {
      return fail("final matching " + cert.final_matching.to_string() +
                  " differs from the result of the steps " + current.to_string());
    }
    if (cert.final_matching != symmetric_matching(n)) {
      return fail("final matching is not symmetric");
    }
  } catch (const Error& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  }
  return VerificationResult{true, {}};
}

namespace {

// Pair values ranked by compare; equal values share a rank. Rank tables keep
// the exhaustive scan off the big-number path.
class RankTable {
 public:
  explicit RankTable(const SortedInput& input) : size_(2 * input.n()), ranks_(size_ * size_, 0) {
    std::vector<std::pair<Element, std::size_t>> values;
    for (Index i = 1; i <= size_; ++i) {
      for (Index j = i + 1; j <= size_; ++j) {
        values.emplace_back(combine(input.at(i), input.at(j)), slot(i, j));
      }
    }
    std::stable_sort(values.begin(), values.end(),
                     [](const auto& a, const auto& b) { return less(a.first, b.first); });
    std::size_t rank = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k > 0 && compare(values[k - 1].first, values[k].first) != 0) ++rank;
      ranks_[values[k].second] = rank;
    }
  }

  std::size_t operator()(const Pair& p) const { return ranks_[slot(p.first, p.second)]; }

 private:
  std::size_t slot(Index i, Index j) const { return (i - 1) * size_ + (j - 1); }

  std::size_t size_;
  std::vector<std::size_t> ranks_;
};

struct BranchBest {
  std::optional<Matching> matching;
  std::size_t score = 0;
  std::uint64_t scanned = 0;
};

// minimize == true: minimize the max rank. Otherwise maximize the min rank.
BranchBest scan_branch(const RankTable& ranks, std::size_t n, Index first_partner, bool minimize) {
  BranchBest best;
  MatchingEnumerator stream(n, first_partner);
  while (stream.next()) {
    ++best.scanned;
    const auto pairs = stream.current().pairs();
    std::size_t score = ranks(pairs[0]);
    for (const Pair& p : pairs.subspan(1)) {
      score = minimize ? std::max(score, ranks(p)) : std::min(score, ranks(p));
    }
    const bool better = !best.matching || (minimize ? score < best.score : score > best.score);
    if (better) {
      best.matching = stream.current();
      best.score = score;
    }
  }
  return best;
}

OracleResult run_oracle(const SortedInput& input, const OracleOptions& options, bool minimize) {
  const std::size_t n = input.n();
  if (n > options.cap) {
    throw Error(ErrorCode::kCapExceeded,
                "n = " + std::to_string(n) + " exceeds the exhaustive cap of " +
                    std::to_string(options.cap) + "; raise the cap to scan " +
                    count_matchings(n).str() + " matchings");
  }
  const RankTable ranks(input);
  std::vector<BranchBest> branches(2 * n - 1);
  auto run = [&](std::size_t b) { branches[b] = scan_branch(ranks, n, b + 2, minimize); };
  if (options.parallel && n >= 5) {
    std::vector<std::jthread> workers;
    workers.reserve(branches.size());
    for (std::size_t b = 0; b < branches.size(); ++b) workers.emplace_back(run, b);
  } else {
    for (std::size_t b = 0; b < branches.size(); ++b) run(b);
  }

  // Branches are in enumeration order, so keeping the first strict winner
  // reproduces the serial tie-break.
  const BranchBest* winner = nullptr;
  BigInt scanned = 0;
  for (const BranchBest& b : branches) {
    scanned += b.scanned;
    if (!winner || (minimize ? b.score < winner->score : b.score > winner->score)) winner = &b;
  }
  EvaluationRow row = evaluate(*winner->matching, input);
  return OracleResult{*winner->matching, minimize ? row.max_value : row.min_value, scanned};
}

}  // namespace

OracleResult minimax_matching(const SortedInput& input, const OracleOptions& options) {
  return run_oracle(input, options, true);
}

OracleResult maximin_matching(const SortedInput& input, const OracleOptions& options) {
  return run_oracle(input, options, false);
}

OptimalityReport optimality_report(const SortedInput& input, const OracleOptions& options) {
  EvaluationRow sym = evaluate(symmetric_matching(input.n()), input);
  OracleResult lo = minimax_matching(input, options);
  OracleResult hi = maximin_matching(input, options);
  const bool minimax_agrees = sym.max_value == lo.value;
  const bool maximin_agrees = sym.min_value == hi.value;
  return OptimalityReport{std::move(sym), std::move(lo), std::move(hi), minimax_agrees,
                          maximin_agrees};
}

}  // namespace pairbound
