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

// Human and machine renderings of tables, solve reports and law checks.

#ifndef PAIRBOUND_REPORT_HPP_
#define PAIRBOUND_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "pairbound/bounding.hpp"
#include "pairbound/sampling.hpp"

namespace pairbound {

enum class OutputFormat { kMarkdown, kJson, kPlain };

OutputFormat parse_format(std::string_view text);

// Row label as printed in tables: "1_3(7)".
std::string row_label(std::size_t n, std::size_t row);

// One row per enumerated matching: pair expressions, Max and Min, with the
// symmetric row flagged "(#)". Throws kCapExceeded for n above `cap`.
std::string render_table(const SortedInput& input, OutputFormat format, std::size_t cap);

struct FeasibilitySection {
  BoundingInstance instance;
  std::optional<Matching> witness;
  bool symmetric_feasible = false;
};

std::string render_solve(const SortedInput& input, const OptimalityReport& report,
                         const std::optional<FeasibilitySection>& feasibility,
                         OutputFormat format);

std::string render_law_reports(std::span<const LawReport> reports, std::uint64_t seed,
                               OutputFormat format);

}  // namespace pairbound

#endif  // PAIRBOUND_REPORT_HPP_
