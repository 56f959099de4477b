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

// pairbound command-line front end. Talks to the library only through the C
// interface in pairbound/pairbound.h.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 precondition violation (infeasible witness, cap exceeded), 4 theorem
// violation (with a state dump on stderr).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pairbound/pairbound.h"

namespace {

constexpr int kExitUsage = 2;

struct Options {
  std::string command;
  std::optional<std::string> op;
  std::size_t dim = 0;
  std::string direction = "upper";
  std::optional<std::string> bound;
  std::optional<std::string> input_path;
  std::optional<std::string> values;
  std::optional<std::string> witness;
  std::string format = "markdown";
  std::optional<std::size_t> cap;
  std::uint64_t seed = 20110617;
  std::optional<std::string> cert_path;
  std::optional<std::size_t> n;
  std::size_t samples = 1000;
  bool all_lines = false;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DatasetPtr = std::unique_ptr<pb_dataset, Deleter<pb_dataset, pb_dataset_free>>;
using InputPtr = std::unique_ptr<pb_input, Deleter<pb_input, pb_input_free>>;
using MatchingPtr = std::unique_ptr<pb_matching, Deleter<pb_matching, pb_matching_free>>;
using EnumeratorPtr = std::unique_ptr<pb_enumerator, Deleter<pb_enumerator, pb_enumerator_free>>;
using CertificatePtr = std::unique_ptr<pb_certificate, Deleter<pb_certificate, pb_certificate_free>>;
using StringPtr = std::unique_ptr<char, Deleter<char, pb_string_free>>;

// Carries a pb_status out of nested helpers.
struct Failure {
  pb_status status;
};

int exit_code(pb_status status) {
  switch (status) {
    case PB_OK: return 0;
    case PB_VERIFICATION_FAILED: return 1;
    case PB_PARSE_ERROR: return 2;
    case PB_PRECONDITION: return 3;
    case PB_THEOREM_VIOLATION: return 4;
    case PB_INVALID_ARGUMENT: return kExitUsage;
    case PB_INTERNAL_ERROR: return 70;
  }
  return 70;
}

void check(pb_status status) {
  if (status != PB_OK) {
    std::cerr << "pairbound: " << pb_status_name(status) << ": " << pb_last_error() << "\n";
    throw Failure{status};
  }
}

[[noreturn]] void usage_error(const std::string& message) {
  std::cerr << "pairbound: " << message << "\n";
  throw Failure{PB_INVALID_ARGUMENT};
}

pb_format format_of(const std::string& f) {
  if (f == "markdown" || f == "md") return PB_FORMAT_MARKDOWN;
  if (f == "json") return PB_FORMAT_JSON;
  if (f == "plain") return PB_FORMAT_PLAIN;
  usage_error("unknown format '" + f + "'");
}

std::size_t resolve_cap(const Options& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("PAIRBOUND_CAP"); env && *env) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      usage_error(std::string("PAIRBOUND_CAP is not a number: ") + env);
    }
  }
  return PB_DEFAULT_CAP;
}

DatasetPtr load_dataset(const Options& o) {
  if (o.values && o.input_path) usage_error("--values and --input are mutually exclusive");
  if (!o.values && !o.input_path) usage_error(o.command + " needs --values or --input");
  const char* op = o.op ? o.op->c_str() : "add";
  pb_dataset* raw = nullptr;
  if (o.values) {
    check(pb_dataset_from_values(op, o.dim, o.values->c_str(), &raw));
  } else {
    check(pb_dataset_from_file(op, o.dim, o.input_path->c_str(), o.all_lines ? 1 : 0, &raw));
  }
  return DatasetPtr(raw);
}

InputPtr input_at(const DatasetPtr& dataset, std::size_t k) {
  pb_input* raw = nullptr;
  check(pb_dataset_input(dataset.get(), k, &raw));
  return InputPtr(raw);
}

MatchingPtr parse_witness(const std::string& text) {
  pb_matching* raw = nullptr;
  check(pb_matching_parse(text.c_str(), &raw));
  return MatchingPtr(raw);
}

void write_output(const std::string& text, const std::optional<std::string>& path) {
  if (!path || *path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out || !(out << text)) usage_error("cannot write '" + *path + "'");
}

int run_table(const Options& o) {
  if (o.bound) usage_error("table does not take --bound");
  const DatasetPtr dataset = load_dataset(o);
  for (std::size_t k = 0; k < pb_dataset_count(dataset.get()); ++k) {
    const InputPtr input = input_at(dataset, k);
    char* raw = nullptr;
    check(pb_render_table(input.get(), format_of(o.format), resolve_cap(o), &raw));
    const StringPtr text(raw);
    if (k) std::cout << "\n";
    std::cout << text.get();
  }
  return 0;
}

int run_solve(const Options& o) {
  if (o.witness && !o.bound) usage_error("--witness needs --bound");
  const DatasetPtr dataset = load_dataset(o);
  pb_status worst = PB_OK;
  for (std::size_t k = 0; k < pb_dataset_count(dataset.get()); ++k) {
    const InputPtr input = input_at(dataset, k);
    MatchingPtr witness;
    if (o.witness) witness = parse_witness(*o.witness);
    char* raw = nullptr;
    const pb_status status =
        pb_solve(input.get(), o.bound ? o.bound->c_str() : nullptr, o.direction.c_str(),
                 witness.get(), format_of(o.format), resolve_cap(o), &raw);
    if (raw) {
      const StringPtr text(raw);
      if (k) std::cout << "\n";
      std::cout << text.get();
    }
    if (status != PB_OK) {
      std::cerr << "pairbound: " << pb_status_name(status) << ": " << pb_last_error() << "\n";
      if (status == PB_THEOREM_VIOLATION || worst == PB_OK) worst = status;
      if (status != PB_THEOREM_VIOLATION) break;
    }
  }
  return exit_code(worst);
}

int run_enumerate(const Options& o) {
  if (o.bound) usage_error("enumerate does not take --bound");
  std::size_t n = 0;
  if (o.n) {
    n = *o.n;
  } else {
    const DatasetPtr dataset = load_dataset(o);
    n = pb_input_n(input_at(dataset, 0).get());
  }
  if (n == 0) usage_error("n must be positive");
  const std::size_t cap = resolve_cap(o);
  if (n > cap) {
    std::cerr << "pairbound: precondition violated: n = " << n << " exceeds the exhaustive cap of "
              << cap << " (use --cap)\n";
    return exit_code(PB_PRECONDITION);
  }
  const pb_format format = format_of(o.format);
  pb_enumerator* raw = nullptr;
  check(pb_enumerator_create(n, &raw));
  const EnumeratorPtr stream(raw);
  if (format == PB_FORMAT_MARKDOWN) std::cout << "| row | matching |\n|---|---|\n";
  const pb_matching* m = nullptr;
  std::size_t row = 0;
  while (pb_enumerator_next(stream.get(), &m)) {
    ++row;
    char* text = nullptr;
    check(pb_matching_to_string(m, &text));
    const StringPtr owned(text);
    switch (format) {
      case PB_FORMAT_MARKDOWN:
        std::cout << "| 1_" << n << "(" << row << ") | " << owned.get() << " |\n";
        break;
      case PB_FORMAT_JSON:
        std::cout << "\"" << owned.get() << "\"\n";
        break;
      case PB_FORMAT_PLAIN:
        std::cout << owned.get() << "\n";
        break;
    }
  }
  return 0;
}

int run_certify(const Options& o) {
  if (!o.bound) usage_error("certify needs --bound");
  if (!o.witness) usage_error("certify needs --witness");
  const DatasetPtr dataset = load_dataset(o);
  const InputPtr input = input_at(dataset, 0);
  const MatchingPtr witness = parse_witness(*o.witness);
  pb_certificate* raw = nullptr;
  check(pb_certify(input.get(), o.bound->c_str(), o.direction.c_str(), witness.get(), &raw));
  const CertificatePtr cert(raw);
  char* json = nullptr;
  check(pb_certificate_to_json(cert.get(), &json));
  const StringPtr text(json);
  write_output(text.get(), o.cert_path);
  if (o.cert_path && *o.cert_path != "-") {
    std::cout << "certificate with " << pb_certificate_step_count(cert.get())
              << " exchange step(s) written to " << *o.cert_path << "\n";
  }
  return 0;
}

int run_verify(const Options& o) {
  if (!o.cert_path) usage_error("verify needs --cert");
  pb_certificate* raw = nullptr;
  check(pb_certificate_load(o.cert_path->c_str(), &raw));
  const CertificatePtr cert(raw);
  char* reason = nullptr;
  const pb_status status = pb_certificate_verify(cert.get(), &reason);
  const StringPtr owned(reason);
  if (status == PB_OK) {
    std::cout << "valid: " << pb_certificate_step_count(cert.get()) << " exchange step(s)\n";
    return 0;
  }
  if (status == PB_VERIFICATION_FAILED) {
    std::cout << "invalid: " << (owned ? owned.get() : pb_last_error()) << "\n";
    return exit_code(status);
  }
  check(status);
  return 0;
}

int run_lawcheck(const Options& o) {
  char* raw = nullptr;
  std::size_t violations = 0;
  const pb_status status = pb_lawcheck(o.op ? o.op->c_str() : "all", o.dim, o.samples, o.seed,
                                       format_of(o.format), &raw, &violations);
  if (!raw) check(status);
  const StringPtr text(raw);
  std::cout << text.get();
  if (status != PB_OK) {
    std::cerr << "pairbound: " << violations << " law violation(s)\n";
  }
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Symmetric pairings in totally ordered commutative semigroups", "pairbound"};
  app.add_option("command", o.command, "table | solve | enumerate | certify | verify | lawcheck")
      ->required()
      ->check(CLI::IsMember({"table", "solve", "enumerate", "certify", "verify", "lawcheck"}));
  app.add_option("--op", o.op, "carrier: add | radd | mul | lexadd")
      ->check(CLI::IsMember({"add", "radd", "mul", "lexadd", "all"}));
  app.add_option("--dim", o.dim, "vector length for lexadd");
  app.add_option("--direction", o.direction, "upper (< N) or lower (> N)")
      ->check(CLI::IsMember({"upper", "lower"}));
  app.add_option("--bound", o.bound, "the bound N");
  app.add_option("--input", o.input_path, "CSV or JSON-lines file");
  app.add_option("--values", o.values, "inline elements, comma separated");
  app.add_option("--witness", o.witness, "witness matching, e.g. \"(1,4)(2,6)(3,5)\"");
  app.add_option("--format", o.format, "markdown | json | plain");
  app.add_option("--cap", o.cap, "largest n for exhaustive scans (default 8, or PAIRBOUND_CAP)");
  app.add_option("--seed", o.seed, "seed for lawcheck sampling");
  app.add_option("--cert", o.cert_path, "certificate file (certify writes, verify reads)");
  app.add_option("--n", o.n, "number of pairs for enumerate");
  app.add_option("--samples", o.samples, "quadruples per carrier for lawcheck");
  app.add_flag("--all", o.all_lines, "process every line of a JSON-lines input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (o.op && *o.op == "all" && o.command != "lawcheck") usage_error("--op all is only for lawcheck");
    if (o.command == "table") return run_table(o);
    if (o.command == "solve") return run_solve(o);
    if (o.command == "enumerate") return run_enumerate(o);
    if (o.command == "certify") return run_certify(o);
    if (o.command == "verify") return run_verify(o);
    return run_lawcheck(o);
  } catch (const Failure& f) {
    return exit_code(f.status);
  }
}
