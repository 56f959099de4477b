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

#include "pairbound/matching.hpp"

#include <algorithm>
#include <cctype>

namespace pairbound {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Index parse_index(std::string_view text, std::string_view whole) {
  text = trim(text);
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      }) || text.size() > 9) {
    throw Error(ErrorCode::kParse, "bad index in pair '" + std::string(whole) + "'");
  }
  return static_cast<Index>(std::stoul(std::string(text)));
}

}  // namespace

std::string Pair::to_string() const {
  return "(" + std::to_string(first) + "," + std::to_string(second) + ")";
}

Pair parse_pair(std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') {
    throw Error(ErrorCode::kParse, "expected a pair like (i,j), got '" + std::string(raw) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "expected a pair like (i,j), got '" + std::string(raw) + "'");
  }
  Index i = parse_index(body.substr(0, comma), raw);
  Index j = parse_index(body.substr(comma + 1), raw);
  if (i == j) throw Error(ErrorCode::kParse, "pair '" + std::string(raw) + "' repeats an index");
  return i < j ? Pair{i, j} : Pair{j, i};
}

Matching Matching::from_pairs(std::vector<Pair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kInvalidArgument, "a matching needs at least one pair");
  const std::size_t size = 2 * pairs.size();
  std::vector<bool> seen(size + 1, false);
  for (Pair& p : pairs) {
    if (p.first > p.second) std::swap(p.first, p.second);
    for (Index i : {p.first, p.second}) {
      if (i < 1 || i > size || seen[i]) {
        throw Error(ErrorCode::kIndexRange,
                    "pairs do not cover {1.." + std::to_string(size) + "} exactly once (index " +
                        std::to_string(i) + ")");
      }
      seen[i] = true;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return Matching(std::move(pairs));
}

bool Matching::contains(const Pair& p) const {
  Pair q = p.first < p.second ? p : Pair{p.second, p.first};
  return std::binary_search(pairs_.begin(), pairs_.end(), q);
}

Index Matching::partner_of(Index i) const {
  for (const Pair& p : pairs_) {
    if (p.first == i) return p.second;
    if (p.second == i) return p.first;
  }
  throw Error(ErrorCode::kIndexRange, "index " + std::to_string(i) + " not in matching");
}

Matching Matching::exchange(std::span<const Pair, 2> removed,
                            std::span<const Pair, 2> inserted) const {
  std::vector<Pair> next = pairs_;
  for (const Pair& r : removed) {
    auto it = std::find(next.begin(), next.end(), r);
    if (it == next.end()) {
      throw Error(ErrorCode::kInvalidArgument, "pair " + r.to_string() + " not present");
    }
    next.erase(it);
  }
  next.insert(next.end(), inserted.begin(), inserted.end());
  try {
    return from_pairs(std::move(next));
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("exchange broke the matching: ") + e.what());
  }
}

std::string Matching::to_string() const {
  std::string out;
  for (const Pair& p : pairs_) out += p.to_string();
  return out;
}

Matching parse_matching(std::string_view raw) {
  std::string_view text = trim(raw);
  std::vector<Pair> pairs;
  while (!text.empty()) {
    auto close = text.find(')');
    if (text.front() != '(' || close == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "malformed matching '" + std::string(raw) + "'");
    }
    pairs.push_back(parse_pair(text.substr(0, close + 1)));
    text = trim(text.substr(close + 1));
  }
  if (pairs.empty()) throw Error(ErrorCode::kParse, "empty matching");
  return Matching::from_pairs(std::move(pairs));
}

Matching symmetric_matching(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  std::vector<Pair> pairs;
  pairs.reserve(n);
  for (Index k = 1; k <= n; ++k) pairs.push_back({k, 2 * n + 1 - k});
  return Matching::from_pairs(std::move(pairs));
}

SortedInput SortedInput::sort(std::vector<Element> raw) {
  if (raw.empty()) throw Error(ErrorCode::kEmptyInput, "input is empty");
  if (raw.size() % 2 != 0) {
    throw Error(ErrorCode::kOddLength,
                "input has " + std::to_string(raw.size()) + " elements; an even count is required");
  }
  const Carrier carrier = raw.front().carrier();
  for (const Element& e : raw) {
    if (e.carrier() != carrier) {
      throw Error(ErrorCode::kCarrierMismatch,
                  "mixed carriers in input: " + carrier.name() + " and " + e.carrier().name());
    }
  }
  std::stable_sort(raw.begin(), raw.end(), [](const Element& a, const Element& b) { return less(a, b); });
  return SortedInput(carrier, std::move(raw));
}

MatchingEnumerator::MatchingEnumerator(std::size_t n, std::optional<Index> first_partner)
    : n_(n), first_partner_(first_partner), used_(2 * n + 1, false),
      current_(std::vector<Pair>(n)) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  if (first_partner && (*first_partner < 2 || *first_partner > 2 * n)) {
    throw Error(ErrorCode::kInvalidArgument, "first partner out of range");
  }
}

void MatchingEnumerator::complete_from(std::size_t level) {
  Index lo = 1;
  for (std::size_t k = level; k < n_; ++k) {
    while (used_[lo]) ++lo;
    Index hi = lo + 1;
    if (k == 0 && first_partner_) {
      hi = *first_partner_;
    } else {
      while (used_[hi]) ++hi;
    }
    current_.pairs_[k] = {lo, hi};
    used_[lo] = used_[hi] = true;
  }
}

bool MatchingEnumerator::advance_from(std::size_t level) {
  for (std::size_t k = level + 1; k-- > 0;) {
    Pair& p = current_.pairs_[k];
    used_[p.first] = used_[p.second] = false;
    if (k == 0 && first_partner_) continue;
    Index hi = p.second + 1;
    while (hi <= 2 * n_ && used_[hi]) ++hi;
    if (hi <= 2 * n_) {
      p.second = hi;
      used_[p.first] = used_[p.second] = true;
      complete_from(k + 1);
      return true;
    }
  }
  return false;
}

bool MatchingEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    complete_from(0);
    return true;
  }
  if (!advance_from(n_ - 1)) {
    done_ = true;
    return false;
  }
  return true;
}

std::vector<Matching> enumerate_matchings(std::size_t n) {
  std::vector<Matching> out;
  MatchingEnumerator stream(n);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

BigInt count_matchings(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  BigInt product = 1;
  for (std::size_t k = 1; k <= n; ++k) product *= 2 * k - 1;
  return product;
}

EvaluationRow evaluate(const Matching& m, const SortedInput& input) {
  if (m.n() != input.n()) {
    throw Error(ErrorCode::kIndexRange,
                "matching covers {1.." + std::to_string(2 * m.n()) + "} but input has " +
                    std::to_string(2 * input.n()) + " elements");
  }
  std::vector<Element> values;
  values.reserve(m.n());
  for (const Pair& p : m.pairs()) values.push_back(combine(input.at(p.first), input.at(p.second)));
  std::size_t hi = 0;
  std::size_t lo = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (compare(values[k], values[hi]) > 0) hi = k;
    if (compare(values[k], values[lo]) < 0) lo = k;
  }
  Element max_value = values[hi];
  Element min_value = values[lo];
  return EvaluationRow{m, std::move(values), std::move(max_value), std::move(min_value)};
}

}  // namespace pairbound
