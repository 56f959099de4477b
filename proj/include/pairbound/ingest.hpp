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

// Element ingestion from inline lists, CSV and JSON-lines text.

#ifndef PAIRBOUND_INGEST_HPP_
#define PAIRBOUND_INGEST_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pairbound/semigroup.hpp"

namespace pairbound {

// Carrier choice as given on the command line. For "lexadd" a zero dim is
// inferred from the first literal.
struct CarrierSelector {
  std::string op = "add";
  std::size_t dim = 0;
};

struct IngestResult {
  Carrier carrier;
  // One element list per dataset. CSV and inline values always give one.
  std::vector<std::vector<Element>> datasets;
};

struct Cell {
  std::string_view text;
  std::size_t column = 1;  // one-based offset of the cell in its line
};

// Splits on commas outside parentheses, so "(1,0),(0,2)" is two cells.
std::vector<Cell> split_cells(std::string_view line);

Carrier resolve_carrier(const CarrierSelector& selector, std::string_view first_literal);

// "v1,v2,...". Throws kOddLength, kEmptyInput, kParse (with column).
IngestResult ingest_values(const CarrierSelector& selector, std::string_view text);

// One element per cell, row-major across all rows; blank lines skipped.
IngestResult ingest_csv(const CarrierSelector& selector, std::string_view content);

// One bracketed array per line, e.g. [1, 3, 6] or [(1,0),(0,2)]. Quoted
// literals are accepted. Only the first non-blank line is read unless
// `all_lines`.
IngestResult ingest_json_lines(const CarrierSelector& selector, std::string_view content,
                               bool all_lines);

// Chooses JSON lines for .jsonl/.ndjson/.json, CSV otherwise.
IngestResult ingest_file(const CarrierSelector& selector, const std::string& path, bool all_lines);

}  // namespace pairbound

#endif  // PAIRBOUND_INGEST_HPP_
