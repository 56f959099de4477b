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

// Random element generation and sampled checks of the carrier laws.

#ifndef PAIRBOUND_SAMPLING_HPP_
#define PAIRBOUND_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pairbound/semigroup.hpp"

namespace pairbound {

using Rng = std::mt19937_64;

// Draws from a small range so that ties are common; roughly one draw in
// sixteen is scaled up past 64 bits to exercise the arbitrary-precision path.
// Integer draws include negatives.
Element sample_element(const Carrier& carrier, Rng& rng);

// `count` elements drawn from a narrower range than sample_element, so
// multisets of a few elements frequently contain duplicates.
std::vector<Element> sample_multiset(const Carrier& carrier, std::size_t count, Rng& rng);

// Four random elements, reordered so that alpha <= beta and gamma <= delta.
Quadruple sample_quadruple(const Carrier& carrier, Rng& rng);

struct LawReport {
  Carrier carrier;
  std::size_t samples = 0;
  std::size_t monotonicity_violations = 0;
  std::size_t commutativity_violations = 0;
  std::size_t associativity_violations = 0;
  std::size_t total_order_violations = 0;
  // Translation invariance; only sampled for the additive scalar carriers.
  std::size_t shift_violations = 0;
  bool shift_checked = false;

  std::size_t total_violations() const {
    return monotonicity_violations + commutativity_violations +
           associativity_violations + total_order_violations + shift_violations;
  }
  bool ok() const { return total_violations() == 0; }
};

LawReport run_law_checks(const Carrier& carrier, std::size_t samples, std::uint64_t seed);

}  // namespace pairbound

#endif  // PAIRBOUND_SAMPLING_HPP_
