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

#include "pairbound/report.hpp"

#include <sstream>

#include "json.hpp"

namespace pairbound {
namespace {

using Json = nlohmann::ordered_json;

std::string pair_expression(const SortedInput& input, const Pair& p, const Element& value) {
  return input.at(p.first).to_string() + " " + std::string(input.carrier().symbol()) + " " +
         input.at(p.second).to_string() + " = " + value.to_string();
}

std::string header_line(const SortedInput& input) {
  std::string out = "2n = " + std::to_string(2 * input.n()) + " :";
  for (std::size_t i = 1; i <= 2 * input.n(); ++i) {
    out += (i == 1 ? " " : ", ");
    out += "a_" + std::to_string(i) + "=" + input.at(i).to_string();
  }
  return out;
}

Json elements_json(const SortedInput& input) {
  Json out = Json::array();
  for (const Element& e : input.elements()) out.push_back(e.to_string());
  return out;
}

void require_within_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "n = " + std::to_string(n) + " exceeds the exhaustive cap of " +
                    std::to_string(cap) + " (" + count_matchings(n).str() + " matchings)");
  }
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "markdown" || text == "md") return OutputFormat::kMarkdown;
  if (text == "json") return OutputFormat::kJson;
  if (text == "plain") return OutputFormat::kPlain;
  throw Error(ErrorCode::kInvalidArgument,
              "format must be markdown, json or plain, got '" + std::string(text) + "'");
}

std::string row_label(std::size_t n, std::size_t row) {
  return "1_" + std::to_string(n) + "(" + std::to_string(row) + ")";
}

std::string render_table(const SortedInput& input, OutputFormat format, std::size_t cap) {
  const std::size_t n = input.n();
  require_within_cap(n, cap);
  const Matching symmetric = symmetric_matching(n);
  std::ostringstream os;
  Json rows = Json::array();

  if (format == OutputFormat::kMarkdown) {
    os << header_line(input) << "\n\n";
    os << "| " << (input.carrier().is_additive() ? "(sum)" : "(product)") << " |";
    for (std::size_t k = 1; k <= n; ++k) os << " pair " << k << " |";
    os << " Max | Min |\n|---|";
    for (std::size_t k = 0; k < n + 2; ++k) os << "---:|";
    os << "\n";
  }

  MatchingEnumerator stream(n);
  std::size_t row = 0;
  while (stream.next()) {
    ++row;
    const EvaluationRow eval = evaluate(stream.current(), input);
    const bool is_symmetric = eval.matching == symmetric;
    const auto pairs = eval.matching.pairs();
    switch (format) {
      case OutputFormat::kMarkdown: {
        os << "| " << (is_symmetric ? "(#) " : "") << row_label(n, row) << " |";
        for (std::size_t k = 0; k < n; ++k) {
          os << " " << pair_expression(input, pairs[k], eval.pair_values[k]) << " |";
        }
        os << " " << eval.max_value.to_string() << " | " << eval.min_value.to_string() << " |\n";
        break;
      }
      case OutputFormat::kPlain: {
        os << (is_symmetric ? "(#)" : "") << row_label(n, row) << '\t'
           << eval.matching.to_string() << '\t';
        for (std::size_t k = 0; k < n; ++k) os << (k ? " " : "") << eval.pair_values[k].to_string();
        os << '\t' << eval.max_value.to_string() << '\t' << eval.min_value.to_string() << '\n';
        break;
      }
      case OutputFormat::kJson: {
        Json r;
        r["label"] = row_label(n, row);
        r["symmetric"] = is_symmetric;
        r["matching"] = eval.matching.to_string();
        Json values = Json::array();
        Json expressions = Json::array();
        for (std::size_t k = 0; k < n; ++k) {
          values.push_back(eval.pair_values[k].to_string());
          expressions.push_back(pair_expression(input, pairs[k], eval.pair_values[k]));
        }
        r["expressions"] = std::move(expressions);
        r["values"] = std::move(values);
        r["max"] = eval.max_value.to_string();
        r["min"] = eval.min_value.to_string();
        rows.push_back(std::move(r));
        break;
      }
    }
  }

  if (format == OutputFormat::kJson) {
    Json doc;
    doc["carrier"] = input.carrier().name();
    doc["elements"] = elements_json(input);
    doc["n"] = n;
    doc["count"] = row;
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
  }
  return os.str();
}

std::string render_solve(const SortedInput& input, const OptimalityReport& report,
                         const std::optional<FeasibilitySection>& feasibility,
                         OutputFormat format) {
  const EvaluationRow& sym = report.symmetric;
  const std::string verdict = report.passed() ? "PASS" : "FAIL";

  if (format == OutputFormat::kJson) {
    Json doc;
    doc["carrier"] = input.carrier().name();
    doc["elements"] = elements_json(input);
    doc["symmetric"] = sym.matching.to_string();
    Json values = Json::array();
    for (const Element& v : sym.pair_values) values.push_back(v.to_string());
    doc["values"] = std::move(values);
    doc["max"] = sym.max_value.to_string();
    doc["min"] = sym.min_value.to_string();
    doc["minimax"] = {{"matching", report.minimax.matching.to_string()},
                      {"value", report.minimax.value.to_string()},
                      {"agrees", report.minimax_agrees}};
    doc["maximin"] = {{"matching", report.maximin.matching.to_string()},
                      {"value", report.maximin.value.to_string()},
                      {"agrees", report.maximin_agrees}};
    doc["scanned"] = report.minimax.scanned.str();
    if (feasibility) {
      Json f;
      f["bound"] = feasibility->instance.bound().to_string();
      f["direction"] = std::string(to_string(feasibility->instance.direction()));
      if (feasibility->witness) f["witness"] = feasibility->witness->to_string();
      f["symmetric_feasible"] = feasibility->symmetric_feasible;
      doc["feasibility"] = std::move(f);
    }
    doc["verdict"] = verdict;
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  if (format == OutputFormat::kMarkdown) {
    os << header_line(input) << "\n\n"
       << "| | matching | Max | Min |\n|---|---|---:|---:|\n"
       << "| (#) symmetric | " << sym.matching.to_string() << " | " << sym.max_value.to_string()
       << " | " << sym.min_value.to_string() << " |\n"
       << "| minimax oracle | " << report.minimax.matching.to_string() << " | "
       << report.minimax.value.to_string() << " | |\n"
       << "| maximin oracle | " << report.maximin.matching.to_string() << " | | "
       << report.maximin.value.to_string() << " |\n\n"
       << "pairs:";
    const auto pairs = sym.matching.pairs();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      os << (k ? ", " : " ") << pair_expression(input, pairs[k], sym.pair_values[k]);
    }
    os << "\nscanned: " << report.minimax.scanned.str() << " matchings\n";
    if (feasibility) {
      os << "bound: N = " << feasibility->instance.bound().to_string() << " ("
         << to_string(feasibility->instance.direction()) << ")\n";
      if (feasibility->witness) os << "witness: " << feasibility->witness->to_string() << " (feasible)\n";
      os << "symmetric feasible: " << (feasibility->symmetric_feasible ? "yes" : "no") << "\n";
    }
    os << "verdict: " << verdict << "\n";
    return os.str();
  }

  os << "symmetric\t" << sym.matching.to_string() << "\n"
     << "max\t" << sym.max_value.to_string() << "\n"
     << "min\t" << sym.min_value.to_string() << "\n"
     << "minimax\t" << report.minimax.value.to_string() << "\t"
     << report.minimax.matching.to_string() << "\n"
     << "maximin\t" << report.maximin.value.to_string() << "\t"
     << report.maximin.matching.to_string() << "\n"
     << "scanned\t" << report.minimax.scanned.str() << "\n";
  if (feasibility) {
    os << "bound\t" << feasibility->instance.bound().to_string() << "\t"
       << to_string(feasibility->instance.direction()) << "\n"
       << "symmetric_feasible\t" << (feasibility->symmetric_feasible ? "yes" : "no") << "\n";
  }
  os << "verdict\t" << verdict << "\n";
  return os.str();
}

std::string render_law_reports(std::span<const LawReport> reports, std::uint64_t seed,
                               OutputFormat format) {
  if (format == OutputFormat::kJson) {
    Json doc;
    doc["seed"] = seed;
    Json list = Json::array();
    for (const LawReport& r : reports) {
      Json j;
      j["carrier"] = r.carrier.name();
      j["samples"] = r.samples;
      j["monotonicity"] = r.monotonicity_violations;
      j["commutativity"] = r.commutativity_violations;
      j["associativity"] = r.associativity_violations;
      j["total_order"] = r.total_order_violations;
      j["shift"] = r.shift_checked ? Json(r.shift_violations) : Json(nullptr);
      j["ok"] = r.ok();
      list.push_back(std::move(j));
    }
    doc["carriers"] = std::move(list);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == OutputFormat::kMarkdown) {
    os << "seed: " << seed << "\n\n"
       << "| carrier | samples | monotonicity | commutativity | associativity | total order | shift | result |\n"
       << "|---|---:|---:|---:|---:|---:|---:|---|\n";
    for (const LawReport& r : reports) {
      os << "| " << r.carrier.name() << " | " << r.samples << " | " << r.monotonicity_violations
         << " | " << r.commutativity_violations << " | " << r.associativity_violations << " | "
         << r.total_order_violations << " | "
         << (r.shift_checked ? std::to_string(r.shift_violations) : std::string("n/a")) << " | "
         << (r.ok() ? "PASS" : "FAIL") << " |\n";
    }
    return os.str();
  }
  for (const LawReport& r : reports) {
    os << r.carrier.name() << '\t' << r.samples << '\t' << r.total_violations() << '\t'
       << (r.ok() ? "PASS" : "FAIL") << '\n';
  }
  return os.str();
}

}  // namespace pairbound
