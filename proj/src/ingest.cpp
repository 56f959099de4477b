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

#include "pairbound/ingest.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace pairbound {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> lines_of(std::string_view content) {
  std::vector<std::string_view> lines;
  while (!content.empty()) {
    auto nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    content.remove_prefix(nl + 1);
  }
  return lines;
}

std::string location(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

// Parses cells of one line, resolving the carrier on the first literal seen.
void parse_cells(const CarrierSelector& selector, std::optional<Carrier>& carrier,
                 const std::vector<Cell>& cells, std::size_t line,
                 std::vector<Element>& out) {
  for (const Cell& cell : cells) {
    const std::string_view literal = unquote(cell.text);
    try {
      if (!carrier) carrier = resolve_carrier(selector, literal);
      out.push_back(parse_element(*carrier, literal));
    } catch (const Error& e) {
      throw Error(e.code(), location(line, cell.column) + e.what());
    }
  }
}

void check_count(const std::vector<Element>& elements, std::string_view where) {
  if (elements.empty()) throw Error(ErrorCode::kEmptyInput, std::string(where) + "no elements");
  if (elements.size() % 2 != 0) {
    throw Error(ErrorCode::kOddLength, std::string(where) + std::to_string(elements.size()) +
                                           " elements; an even count is required");
  }
}

IngestResult finish(std::optional<Carrier> carrier, std::vector<std::vector<Element>> datasets) {
  if (!carrier || datasets.empty()) throw Error(ErrorCode::kEmptyInput, "no elements in input");
  return IngestResult{*carrier, std::move(datasets)};
}

}  // namespace

std::vector<Cell> split_cells(std::string_view line) {
  std::vector<Cell> cells;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= line.size(); ++k) {
    const char c = k < line.size() ? line[k] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth <= 0) {
      cells.push_back(Cell{line.substr(start, k - start), start + 1});
      start = k + 1;
    }
  }
  return cells;
}

Carrier resolve_carrier(const CarrierSelector& selector, std::string_view first_literal) {
  if (selector.op != "lexadd" || selector.dim != 0) {
    return Carrier::from_name(selector.op, selector.dim);
  }
  std::string_view t = trim(first_literal);
  if (t.size() < 2 || t.front() != '(') {
    throw Error(ErrorCode::kParse, "cannot infer vector dimension from '" + std::string(t) + "'");
  }
  std::size_t dim = 1;
  for (char c : t) dim += c == ',' ? 1 : 0;
  return Carrier::natural_vector_lex_add(dim);
}

IngestResult ingest_values(const CarrierSelector& selector, std::string_view text) {
  std::optional<Carrier> carrier;
  std::vector<Element> elements;
  if (!trim(text).empty()) parse_cells(selector, carrier, split_cells(text), 1, elements);
  check_count(elements, "values: ");
  return finish(carrier, {std::move(elements)});
}

IngestResult ingest_csv(const CarrierSelector& selector, std::string_view content) {
  std::optional<Carrier> carrier;
  std::vector<Element> elements;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(content)) {
    ++line_no;
    if (trim(line).empty()) continue;
    parse_cells(selector, carrier, split_cells(line), line_no, elements);
  }
  check_count(elements, "csv: ");
  return finish(carrier, {std::move(elements)});
}

IngestResult ingest_json_lines(const CarrierSelector& selector, std::string_view content,
                               bool all_lines) {
  std::optional<Carrier> carrier;
  std::vector<std::vector<Element>> datasets;
  std::size_t line_no = 0;
  for (std::string_view line : lines_of(content)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw Error(ErrorCode::kParse, location(line_no, 1) + "expected a bracketed array");
    }
    const std::size_t offset = static_cast<std::size_t>(body.data() - line.data()) + 1;
    std::vector<Cell> cells;
    std::string_view inner = body.substr(1, body.size() - 2);
    if (!trim(inner).empty()) {
      cells = split_cells(inner);
      for (Cell& c : cells) c.column += offset;
    }
    std::vector<Element> elements;
    parse_cells(selector, carrier, cells, line_no, elements);
    check_count(elements, location(line_no, 1));
    datasets.push_back(std::move(elements));
    if (!all_lines) break;
  }
  return finish(carrier, std::move(datasets));
}

IngestResult ingest_file(const CarrierSelector& selector, const std::string& path,
                         bool all_lines) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();
  auto ends_with = [&](std::string_view ext) { return std::string_view(path).ends_with(ext); };
  if (ends_with(".jsonl") || ends_with(".ndjson") || ends_with(".json")) {
    return ingest_json_lines(selector, content, all_lines);
  }
  return ingest_csv(selector, content);
}

}  // namespace pairbound
