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

#include "pairbound/semigroup.hpp"

#include <algorithm>
#include <cctype>

namespace pairbound {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kCarrierMismatch: return "carrier mismatch";
    case ErrorCode::kDomainViolation: return "domain violation";
    case ErrorCode::kOddLength: return "odd length";
    case ErrorCode::kEmptyInput: return "empty input";
    case ErrorCode::kIndexRange: return "index range mismatch";
    case ErrorCode::kInfeasibleWitness: return "infeasible witness";
    case ErrorCode::kCapExceeded: return "exhaustive cap exceeded";
    case ErrorCode::kTheoremViolation: return "theorem violation";
  }
  return "unknown error";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

[[noreturn]] void parse_failure(std::string_view text, std::string_view what) {
  throw Error(ErrorCode::kParse,
              "malformed literal '" + std::string(text) + "': " + std::string(what));
}

BigInt parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) parse_failure(text, "expected an optionally signed decimal integer");
  BigInt value{std::string(body)};
  return negative ? BigInt(-value) : value;
}

// "p", "p/q" or a plain decimal "d.ddd".
Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) parse_failure(text, "denominator must be a positive decimal integer");
    BigInt den(std::string{den_text});
    if (den == 0) parse_failure(text, "zero denominator");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) parse_failure(text, "bad fractional digits");
    bool negative = !int_part.empty() && int_part.front() == '-';
    BigInt whole = (int_part.empty() || int_part == "-" || int_part == "+")
                       ? BigInt(0)
                       : parse_integer(int_part);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt frac_num(std::string{frac});
    BigInt magnitude = boost::multiprecision::abs(whole) * scale + frac_num;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_integer(text));
}

std::string rational_text(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void require_same_carrier(const Element& a, const Element& b) {
  if (a.carrier() != b.carrier()) {
    throw Error(ErrorCode::kCarrierMismatch,
                "operands from different carriers: " + a.carrier().name() +
                    " and " + b.carrier().name());
  }
}

}  // namespace

Carrier Carrier::natural_vector_lex_add(std::size_t dim) {
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "lexadd carrier needs a positive dimension");
  }
  return Carrier(CarrierKind::kNaturalVectorLexAdd, dim);
}

Carrier Carrier::from_name(std::string_view name, std::size_t dim) {
  if (name == "add") return integer_add();
  if (name == "radd") return rational_add();
  if (name == "mul") return positive_rational_mul();
  if (name == "lexadd") return natural_vector_lex_add(dim);
  if (name.starts_with("lexadd:")) {
    std::string_view k = name.substr(7);
    if (!all_digits(k)) throw Error(ErrorCode::kInvalidArgument, "bad carrier '" + std::string(name) + "'");
    std::size_t parsed = std::stoul(std::string(k));
    if (dim != 0 && dim != parsed) {
      throw Error(ErrorCode::kInvalidArgument, "conflicting lexadd dimensions");
    }
    return natural_vector_lex_add(parsed);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown carrier '" + std::string(name) + "' (expected add, radd, mul or lexadd)");
}

std::string Carrier::name() const {
  switch (kind_) {
    case CarrierKind::kIntegerAdd: return "add";
    case CarrierKind::kRationalAdd: return "radd";
    case CarrierKind::kPositiveRationalMul: return "mul";
    case CarrierKind::kNaturalVectorLexAdd: return "lexadd:" + std::to_string(dim_);
  }
  return "?";
}

std::string_view Carrier::symbol() const noexcept {
  return kind_ == CarrierKind::kPositiveRationalMul ? "·" : "+";
}

Element Element::integer(BigInt value) {
  return Element(Carrier::integer_add(), std::move(value));
}

Element Element::rational(const Carrier& carrier, Rational value) {
  switch (carrier.kind()) {
    case CarrierKind::kRationalAdd:
      break;
    case CarrierKind::kPositiveRationalMul:
      if (value <= 0) {
        throw Error(ErrorCode::kDomainViolation,
                    "mul carrier requires positive values, got " + rational_text(value));
      }
      break;
    default:
      throw Error(ErrorCode::kCarrierMismatch, "rational value for carrier " + carrier.name());
  }
  return Element(carrier, std::move(value));
}

Element Element::vector(const Carrier& carrier, Vector components) {
  if (carrier.kind() != CarrierKind::kNaturalVectorLexAdd) {
    throw Error(ErrorCode::kCarrierMismatch, "vector value for carrier " + carrier.name());
  }
  if (components.size() != carrier.dim()) {
    throw Error(ErrorCode::kCarrierMismatch,
                "vector has " + std::to_string(components.size()) +
                    " components, carrier expects " + std::to_string(carrier.dim()));
  }
  for (const BigInt& c : components) {
    if (c < 0) {
      throw Error(ErrorCode::kDomainViolation, "vector components must be non-negative");
    }
  }
  return Element(carrier, std::move(components));
}

std::string Element::to_string() const {
  switch (carrier_.kind()) {
    case CarrierKind::kIntegerAdd:
      return as_integer().str();
    case CarrierKind::kRationalAdd:
    case CarrierKind::kPositiveRationalMul:
      return rational_text(as_rational());
    case CarrierKind::kNaturalVectorLexAdd: {
      std::string out = "(";
      const Vector& v = as_vector();
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ',';
        out += v[k].str();
      }
      return out + ")";
    }
  }
  return {};
}

Element parse_element(const Carrier& carrier, std::string_view raw) {
  std::string_view text = trim(raw);
  if (text.empty()) parse_failure(raw, "empty literal");
  switch (carrier.kind()) {
    case CarrierKind::kIntegerAdd:
      return Element::integer(parse_integer(text));
    case CarrierKind::kRationalAdd:
    case CarrierKind::kPositiveRationalMul:
      return Element::rational(carrier, parse_rational(text));
    case CarrierKind::kNaturalVectorLexAdd: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        parse_failure(text, "expected a vector like (n1,...,nk)");
      }
      std::string_view body = text.substr(1, text.size() - 2);
      Element::Vector components;
      while (true) {
        auto comma = body.find(',');
        std::string_view part = trim(body.substr(0, comma));
        if (part.starts_with('-') && all_digits(part.substr(1))) {
          throw Error(ErrorCode::kDomainViolation,
                      "vector components must be non-negative in '" + std::string(text) + "'");
        }
        if (!all_digits(part)) parse_failure(text, "vector components must be decimal naturals");
        components.emplace_back(std::string(part));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
      }
      return Element::vector(carrier, std::move(components));
    }
  }
  parse_failure(text, "unsupported carrier");
}

Element combine(const Element& a, const Element& b) {
  require_same_carrier(a, b);
  const Carrier& carrier = a.carrier();
  switch (carrier.kind()) {
    case CarrierKind::kIntegerAdd:
      return Element::integer(a.as_integer() + b.as_integer());
    case CarrierKind::kRationalAdd:
      return Element::rational(carrier, a.as_rational() + b.as_rational());
    case CarrierKind::kPositiveRationalMul:
      return Element::rational(carrier, a.as_rational() * b.as_rational());
    case CarrierKind::kNaturalVectorLexAdd: {
      const auto& x = a.as_vector();
      const auto& y = b.as_vector();
      Element::Vector sum(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) sum[k] = x[k] + y[k];
      return Element::vector(carrier, std::move(sum));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unsupported carrier");
}

std::strong_ordering compare(const Element& a, const Element& b) {
  require_same_carrier(a, b);
  auto order = [](const auto& x, const auto& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  };
  switch (a.carrier().kind()) {
    case CarrierKind::kIntegerAdd:
      return order(a.as_integer(), b.as_integer());
    case CarrierKind::kRationalAdd:
    case CarrierKind::kPositiveRationalMul:
      return order(a.as_rational(), b.as_rational());
    case CarrierKind::kNaturalVectorLexAdd: {
      const auto& x = a.as_vector();
      const auto& y = b.as_vector();
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (auto c = order(x[k], y[k]); c != 0) return c;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::vector<Quadruple> check_monotonicity_law(const Carrier& carrier,
                                              std::span<const Quadruple> samples) {
  std::vector<Quadruple> violations;
  for (const Quadruple& q : samples) {
    for (const Element* e : {&q.alpha, &q.beta, &q.gamma, &q.delta}) {
      if (e->carrier() != carrier) {
        throw Error(ErrorCode::kCarrierMismatch,
                    "quadruple element from carrier " + e->carrier().name() +
                        ", expected " + carrier.name());
      }
    }
    if (compare(q.alpha, q.beta) > 0 || compare(q.gamma, q.delta) > 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "quadruple must satisfy alpha <= beta and gamma <= delta");
    }
    if (compare(combine(q.alpha, q.gamma), combine(q.beta, q.delta)) > 0) {
      violations.push_back(q);
    }
  }
  return violations;
}

}  // namespace pairbound
