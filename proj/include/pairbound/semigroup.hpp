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

// Totally ordered commutative semigroups with exact arithmetic.
//
// A carrier is a set G with a commutative, associative operation `combine`
// and a total order such that
//
//   a <= b and c <= d  implies  combine(a, c) <= combine(b, d).
//
// The built-in carriers are integers under addition, rationals under
// addition, positive rationals under multiplication, and fixed-length vectors
// of non-negative integers under componentwise addition ordered
// lexicographically. Nothing here rounds: strict inequalities against a bound
// must be decided exactly.

#ifndef PAIRBOUND_SEMIGROUP_HPP_
#define PAIRBOUND_SEMIGROUP_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pairbound/error.hpp"

namespace pairbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class CarrierKind {
  kIntegerAdd,
  kRationalAdd,
  kPositiveRationalMul,
  kNaturalVectorLexAdd,
};

class Carrier {
 public:
  static Carrier integer_add() { return Carrier(CarrierKind::kIntegerAdd, 0); }
  static Carrier rational_add() { return Carrier(CarrierKind::kRationalAdd, 0); }
  static Carrier positive_rational_mul() {
    return Carrier(CarrierKind::kPositiveRationalMul, 0);
  }
  // Throws kInvalidArgument for dim == 0.
  static Carrier natural_vector_lex_add(std::size_t dim);

  // Accepts "add", "radd", "mul", "lexadd" (needs dim) and "lexadd:K".
  static Carrier from_name(std::string_view name, std::size_t dim = 0);

  CarrierKind kind() const noexcept { return kind_; }
  // Vector length; zero for scalar carriers.
  std::size_t dim() const noexcept { return dim_; }
  bool is_additive() const noexcept {
    return kind_ != CarrierKind::kPositiveRationalMul;
  }

  // Short selector name as accepted by from_name; "lexadd:K" for vectors.
  std::string name() const;
  // The operator glyph used in tables: "+" or "·".
  std::string_view symbol() const noexcept;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  Carrier(CarrierKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  CarrierKind kind_;
  std::size_t dim_;
};

// An exact value in a carrier's domain. Construction checks the domain, so an
// Element that exists is always valid for its carrier.
class Element {
 public:
  using Vector = std::vector<BigInt>;
  using Value = std::variant<BigInt, Rational, Vector>;

  static Element integer(BigInt value);
  // For kRationalAdd or kPositiveRationalMul.
  static Element rational(const Carrier& carrier, Rational value);
  static Element vector(const Carrier& carrier, Vector components);

  const Carrier& carrier() const noexcept { return carrier_; }
  const Value& value() const noexcept { return value_; }

  const BigInt& as_integer() const { return std::get<BigInt>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const Vector& as_vector() const { return std::get<Vector>(value_); }

  // Canonical text: "-12", "3/4" (lowest terms, integers without "/1"),
  // "(1,0,2)".
  std::string to_string() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Element(Carrier carrier, Value value)
      : carrier_(carrier), value_(std::move(value)) {}

  Carrier carrier_;
  Value value_;
};

// Parses one literal in the carrier's textual form. Surrounding whitespace is
// ignored. Throws kParse on malformed text, kDomainViolation for values
// outside the domain, kCarrierMismatch on a wrong vector length.
Element parse_element(const Carrier& carrier, std::string_view text);

Element combine(const Element& a, const Element& b);
std::strong_ordering compare(const Element& a, const Element& b);

inline bool less(const Element& a, const Element& b) { return compare(a, b) < 0; }

struct Quadruple {
  Element alpha;
  Element beta;
  Element gamma;
  Element delta;
};

// Returns every quadruple with alpha <= beta, gamma <= delta for which
// combine(alpha, gamma) <= combine(beta, delta) fails. A quadruple that does
// not satisfy its own ordering precondition raises kInvalidArgument.
std::vector<Quadruple> check_monotonicity_law(const Carrier& carrier,
                                              std::span<const Quadruple> samples);

}  // namespace pairbound

#endif  // PAIRBOUND_SEMIGROUP_HPP_
