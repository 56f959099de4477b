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

// Perfect matchings of the index set {1, ..., 2n} over a sorted input.

#ifndef PAIRBOUND_MATCHING_HPP_
#define PAIRBOUND_MATCHING_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairbound/semigroup.hpp"

namespace pairbound {

// One-based position into a SortedInput.
using Index = std::size_t;

struct Pair {
  Index first = 0;
  Index second = 0;

  // "(i,j)"
  std::string to_string() const;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Parses "(i,j)" and returns it with first < second. Throws kParse.
Pair parse_pair(std::string_view text);

// A partition of {1, ..., 2n} into n pairs, held in canonical form: i < j
// inside every pair and pairs ascending by first index.
class Matching {
 public:
  // Validates coverage and canonicalizes. Throws kIndexRange if the pairs do
  // not cover {1, ..., 2·pairs.size()} exactly once, kInvalidArgument if empty.
  static Matching from_pairs(std::vector<Pair> pairs);

  std::size_t n() const noexcept { return pairs_.size(); }
  std::span<const Pair> pairs() const noexcept { return pairs_; }

  bool contains(const Pair& p) const;
  Index partner_of(Index i) const;

  // Removes both `removed` pairs and inserts both `inserted` pairs. Throws
  // kInvalidArgument if a removed pair is missing or the result is not a
  // perfect matching.
  Matching exchange(std::span<const Pair, 2> removed, std::span<const Pair, 2> inserted) const;

  // "(i1,j1)(i2,j2)...(in,jn)"
  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  // Lexicographic on the canonical pair sequence; coincides with enumeration
  // order.
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  friend class MatchingEnumerator;
  explicit Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}

  std::vector<Pair> pairs_;
};

Matching parse_matching(std::string_view text);

// The pairing (k, 2n+1-k) for k = 1..n.
Matching symmetric_matching(std::size_t n);

// Elements a_1 <= ... <= a_2n of a single carrier.
class SortedInput {
 public:
  // Stable sort by compare. Throws kEmptyInput, kOddLength, kCarrierMismatch.
  static SortedInput sort(std::vector<Element> raw);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t n() const noexcept { return elements_.size() / 2; }
  std::span<const Element> elements() const noexcept { return elements_; }
  // One-based.
  const Element& at(Index i) const { return elements_.at(i - 1); }

  friend bool operator==(const SortedInput&, const SortedInput&) = default;

 private:
  SortedInput(Carrier carrier, std::vector<Element> elements)
      : carrier_(carrier), elements_(std::move(elements)) {}

  Carrier carrier_;
  std::vector<Element> elements_;
};

// Lazily yields every canonical matching of {1, ..., 2n} exactly once. The
// smallest unmatched index is paired with each larger unmatched index in
// ascending order, so n = 3 starts (1,2)(3,4)(5,6), (1,2)(3,5)(4,6), ... and
// ends (1,6)(2,5)(3,4).
//
// Single consumer. The optional `first_partner` restricts the stream to the
// branch whose first pair is (1, first_partner); the 2n-1 branches partition
// the full stream.
class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(std::size_t n, std::optional<Index> first_partner = std::nullopt);

  // Advances to the next matching; false once the stream is exhausted. The
  // first call positions on the first matching.
  bool next();
  const Matching& current() const noexcept { return current_; }

 private:
  bool advance_from(std::size_t level);
  void complete_from(std::size_t level);

  std::size_t n_;
  std::optional<Index> first_partner_;
  bool started_ = false;
  bool done_ = false;
  std::vector<bool> used_;
  Matching current_;
};

// Materializes the stream; intended for small n.
std::vector<Matching> enumerate_matchings(std::size_t n);

// (2n-1)!! = 1 * 3 * ... * (2n-1).
BigInt count_matchings(std::size_t n);

struct EvaluationRow {
  Matching matching;
  std::vector<Element> pair_values;
  Element max_value;
  Element min_value;
};

// Throws kIndexRange if the matching size differs from input.n().
EvaluationRow evaluate(const Matching& m, const SortedInput& input);

}  // namespace pairbound

#endif  // PAIRBOUND_MATCHING_HPP_
