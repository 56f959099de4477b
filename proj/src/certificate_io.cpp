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

#include "pairbound/certificate_io.hpp"

#include "json.hpp"

namespace pairbound {
namespace {

using Json = nlohmann::ordered_json;

Json justification_json(const Justification& j) {
  Json out;
  out["lhs"] = j.lhs.to_string();
  out["lhs_value"] = j.lhs_value.to_string();
  out["relation"] = std::string(to_string(j.relation));
  out["rhs"] = j.rhs_pair ? j.rhs_pair->to_string() : std::string("N");
  out["rhs_value"] = j.rhs_value.to_string();
  return out;
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("certificate is missing field '") + key + "'");
  }
  return object.at(key);
}

std::string string_field(const Json& object, const char* key) {
  const Json& v = field(object, key);
  if (!v.is_string()) {
    throw Error(ErrorCode::kParse, std::string("certificate field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

std::size_t index_field(const Json& object, const char* key) {
  const Json& v = field(object, key);
  if (!v.is_number_unsigned()) {
    throw Error(ErrorCode::kParse,
                std::string("certificate field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::array<Pair, 2> pair_array(const Json& object, const char* key) {
  const Json& v = field(object, key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
    throw Error(ErrorCode::kParse, std::string("'") + key + "' must hold two pairs");
  }
  return {parse_pair(v[0].get<std::string>()), parse_pair(v[1].get<std::string>())};
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  const BoundingInstance& inst = cert.instance;
  Json instance;
  instance["carrier"] = inst.input().carrier().name();
  Json elements = Json::array();
  for (const Element& e : inst.input().elements()) elements.push_back(e.to_string());
  instance["elements"] = std::move(elements);
  instance["bound"] = inst.bound().to_string();
  instance["direction"] = std::string(to_string(inst.direction()));

  Json steps = Json::array();
  for (const ExchangeStep& s : cert.steps) {
    Json step;
    step["level"] = s.level;
    step["ell"] = s.ell;
    step["ell_prime"] = s.ell_prime;
    step["removed"] = Json::array({s.removed[0].to_string(), s.removed[1].to_string()});
    step["inserted"] = Json::array({s.inserted[0].to_string(), s.inserted[1].to_string()});
    Json just = Json::array();
    for (const Justification& j : s.justifications) just.push_back(justification_json(j));
    step["justifications"] = std::move(just);
    steps.push_back(std::move(step));
  }

  Json doc;
  doc["instance"] = std::move(instance);
  doc["witness"] = cert.witness.to_string();
  doc["steps"] = std::move(steps);
  doc["final"] = cert.final_matching.to_string();
  return doc.dump(2) + "\n";
}

namespace {

Certificate parse_document(const Json& doc) {
  const Json& instance = field(doc, "instance");
  const Carrier carrier = Carrier::from_name(string_field(instance, "carrier"));
  const Json& elements_json = field(instance, "elements");
  if (!elements_json.is_array()) throw Error(ErrorCode::kParse, "'elements' must be an array");
  std::vector<Element> elements;
  for (const Json& e : elements_json) {
    if (!e.is_string()) throw Error(ErrorCode::kParse, "elements must be strings");
    elements.push_back(parse_element(carrier, e.get<std::string>()));
  }
  for (std::size_t k = 1; k < elements.size(); ++k) {
    if (compare(elements[k - 1], elements[k]) > 0) {
      throw Error(ErrorCode::kParse, "certificate elements are not in ascending order");
    }
  }
  SortedInput input = SortedInput::sort(std::move(elements));
  BoundingInstance inst(std::move(input), parse_element(carrier, string_field(instance, "bound")),
                        parse_direction(string_field(instance, "direction")));

  Matching witness = parse_matching(string_field(doc, "witness"));
  std::vector<ExchangeStep> steps;
  const Json& steps_json = field(doc, "steps");
  if (!steps_json.is_array()) throw Error(ErrorCode::kParse, "'steps' must be an array");
  for (const Json& s : steps_json) {
    ExchangeStep step;
    step.level = index_field(s, "level");
    step.ell = index_field(s, "ell");
    step.ell_prime = index_field(s, "ell_prime");
    step.removed = pair_array(s, "removed");
    step.inserted = pair_array(s, "inserted");
    const Json& just = field(s, "justifications");
    if (!just.is_array()) throw Error(ErrorCode::kParse, "'justifications' must be an array");
    for (const Json& j : just) {
      std::string rhs = string_field(j, "rhs");
      step.justifications.push_back(Justification{
          parse_pair(string_field(j, "lhs")),
          parse_element(carrier, string_field(j, "lhs_value")),
          parse_relation(string_field(j, "relation")),
          rhs == "N" ? std::nullopt : std::optional<Pair>(parse_pair(rhs)),
          parse_element(carrier, string_field(j, "rhs_value")),
      });
    }
    steps.push_back(std::move(step));
  }
  Matching final_matching = parse_matching(string_field(doc, "final"));
  return Certificate{std::move(inst), std::move(witness), std::move(steps),
                     std::move(final_matching)};
}

}  // namespace

Certificate certificate_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    return parse_document(doc);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, std::string("invalid certificate: ") + e.what());
  }
}

}  // namespace pairbound
