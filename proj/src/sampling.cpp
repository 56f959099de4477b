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

#include "pairbound/sampling.hpp"

#include <utility>

namespace pairbound {
namespace {

BigInt draw(Rng& rng, long lo, long hi) {
  return BigInt(std::uniform_int_distribution<long>(lo, hi)(rng));
}

BigInt maybe_widen(BigInt v, Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) {
    v *= BigInt(1) << 80;
    v += draw(rng, 0, 1000);
  }
  return v;
}

Element draw_element(const Carrier& carrier, Rng& rng, long span, bool widen) {
  auto scalar = [&](long lo, long hi) {
    BigInt v = draw(rng, lo, hi);
    return widen ? maybe_widen(std::move(v), rng) : v;
  };
  switch (carrier.kind()) {
    case CarrierKind::kIntegerAdd:
      return Element::integer(scalar(-span, span));
    case CarrierKind::kRationalAdd:
      return Element::rational(carrier, Rational(scalar(-span, span), draw(rng, 1, 6)));
    case CarrierKind::kPositiveRationalMul:
      return Element::rational(carrier, Rational(scalar(1, span), draw(rng, 1, 6)));
    case CarrierKind::kNaturalVectorLexAdd: {
      Element::Vector v(carrier.dim());
      for (auto& c : v) c = scalar(0, span / 4);
      return Element::vector(carrier, std::move(v));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unsupported carrier");
}

}  // namespace

Element sample_element(const Carrier& carrier, Rng& rng) {
  return draw_element(carrier, rng, 20, true);
}

std::vector<Element> sample_multiset(const Carrier& carrier, std::size_t count, Rng& rng) {
  std::vector<Element> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(draw_element(carrier, rng, 12, false));
  return out;
}

Quadruple sample_quadruple(const Carrier& carrier, Rng& rng) {
  Element a = sample_element(carrier, rng);
  Element b = sample_element(carrier, rng);
  Element c = sample_element(carrier, rng);
  Element d = sample_element(carrier, rng);
  if (compare(a, b) > 0) std::swap(a, b);
  if (compare(c, d) > 0) std::swap(c, d);
  return Quadruple{std::move(a), std::move(b), std::move(c), std::move(d)};
}

LawReport run_law_checks(const Carrier& carrier, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  LawReport report{.carrier = carrier};
  report.samples = samples;
  report.shift_checked = carrier.kind() == CarrierKind::kIntegerAdd ||
                         carrier.kind() == CarrierKind::kRationalAdd;

  std::vector<Quadruple> quads;
  quads.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) quads.push_back(sample_quadruple(carrier, rng));
  report.monotonicity_violations = check_monotonicity_law(carrier, quads).size();

  for (const Quadruple& q : quads) {
    // Reuse the drawn values in a different arrangement for the other laws.
    const Element& a = q.alpha;
    const Element& b = q.delta;
    const Element& c = q.gamma;

    if (combine(a, b) != combine(b, a)) ++report.commutativity_violations;
    if (combine(combine(a, b), c) != combine(a, combine(b, c))) {
      ++report.associativity_violations;
    }

    bool order_ok = compare(a, a) == 0 &&
                    compare(a, b) == (0 <=> compare(b, a)) &&
                    ((compare(a, b) == 0) == (a == b));
    if (compare(a, b) <= 0 && compare(b, c) <= 0 && compare(a, c) > 0) order_ok = false;
    if (compare(c, b) <= 0 && compare(b, a) <= 0 && compare(c, a) > 0) order_ok = false;
    if (!order_ok) ++report.total_order_violations;

    if (report.shift_checked) {
      const Element& shift = q.beta;
      bool shift_ok = compare(a, b) == compare(combine(a, shift), combine(b, shift)) &&
                      combine(combine(a, shift), combine(b, shift)) ==
                          combine(combine(a, b), combine(shift, shift));
      if (!shift_ok) ++report.shift_violations;
    }
  }
  return report;
}

}  // namespace pairbound
