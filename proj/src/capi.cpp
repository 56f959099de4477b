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

#include "pairbound/pairbound.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "pairbound/bounding.hpp"
#include "pairbound/certificate_io.hpp"
#include "pairbound/ingest.hpp"
#include "pairbound/report.hpp"
#include "pairbound/sampling.hpp"

struct pb_dataset {
  pairbound::IngestResult result;
};

struct pb_input {
  pairbound::SortedInput input;
};

struct pb_matching {
  pairbound::Matching matching;
};

struct pb_enumerator {
  pairbound::MatchingEnumerator stream;
  std::optional<pb_matching> current;
};

struct pb_certificate {
  pairbound::Certificate cert;
};

namespace {

using namespace pairbound;

thread_local std::string last_error;

pb_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kOddLength:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kDomainViolation:
    case ErrorCode::kCarrierMismatch:
      return PB_PARSE_ERROR;
    case ErrorCode::kIndexRange:
    case ErrorCode::kInfeasibleWitness:
    case ErrorCode::kCapExceeded:
      return PB_PRECONDITION;
    case ErrorCode::kTheoremViolation:
      return PB_THEOREM_VIOLATION;
    case ErrorCode::kInvalidArgument:
      return PB_INVALID_ARGUMENT;
  }
  return PB_INTERNAL_ERROR;
}

pb_status fail(pb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into a status and last_error.
template <class Body>
pb_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const TheoremViolation& e) {
    return fail(PB_THEOREM_VIOLATION, std::string(e.what()) + "\n" + e.state_dump());
  } catch (const Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PB_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(PB_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(PB_INTERNAL_ERROR, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

OutputFormat to_format(pb_format f) {
  switch (f) {
    case PB_FORMAT_MARKDOWN: return OutputFormat::kMarkdown;
    case PB_FORMAT_JSON: return OutputFormat::kJson;
    case PB_FORMAT_PLAIN: return OutputFormat::kPlain;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown output format");
}

std::size_t effective_cap(std::size_t cap) { return cap == 0 ? PB_DEFAULT_CAP : cap; }

BoundingInstance make_instance(const pb_input* input, const char* bound, const char* direction) {
  require(input, "input");
  require(bound, "bound");
  const Carrier& carrier = input->input.carrier();
  return BoundingInstance(input->input, parse_element(carrier, bound),
                          parse_direction(direction ? direction : "upper"));
}

}  // namespace

extern "C" {

const char* pb_version(void) { return "0.1.0"; }

const char* pb_status_name(pb_status status) {
  switch (status) {
    case PB_OK: return "ok";
    case PB_VERIFICATION_FAILED: return "verification failed";
    case PB_PARSE_ERROR: return "parse error";
    case PB_PRECONDITION: return "precondition violated";
    case PB_THEOREM_VIOLATION: return "theorem violation";
    case PB_INVALID_ARGUMENT: return "invalid argument";
    case PB_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* pb_last_error(void) { return last_error.c_str(); }

void pb_string_free(char* s) { std::free(s); }

pb_status pb_dataset_from_values(const char* op, size_t dim, const char* values,
                                 pb_dataset** out) {
  return guarded([&] {
    require(values, "values");
    require(out, "out");
    *out = new pb_dataset{ingest_values(CarrierSelector{op ? op : "add", dim}, values)};
    return PB_OK;
  });
}

pb_status pb_dataset_from_file(const char* op, size_t dim, const char* path, int all_lines,
                               pb_dataset** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new pb_dataset{ingest_file(CarrierSelector{op ? op : "add", dim}, path, all_lines != 0)};
    return PB_OK;
  });
}

size_t pb_dataset_count(const pb_dataset* dataset) {
  return dataset ? dataset->result.datasets.size() : 0;
}

pb_status pb_dataset_input(const pb_dataset* dataset, size_t index, pb_input** out) {
  return guarded([&] {
    require(dataset, "dataset");
    require(out, "out");
    if (index >= dataset->result.datasets.size()) {
      throw Error(ErrorCode::kInvalidArgument, "dataset index out of range");
    }
    *out = new pb_input{SortedInput::sort(dataset->result.datasets[index])};
    return PB_OK;
  });
}

void pb_dataset_free(pb_dataset* dataset) { delete dataset; }

pb_status pb_input_from_values(const char* op, size_t dim, const char* values, pb_input** out) {
  return guarded([&] {
    require(values, "values");
    require(out, "out");
    IngestResult r = ingest_values(CarrierSelector{op ? op : "add", dim}, values);
    *out = new pb_input{SortedInput::sort(std::move(r.datasets.front()))};
    return PB_OK;
  });
}

size_t pb_input_n(const pb_input* input) { return input ? input->input.n() : 0; }

pb_status pb_input_element(const pb_input* input, size_t index, char** out) {
  return guarded([&] {
    require(input, "input");
    require(out, "out");
    if (index < 1 || index > 2 * input->input.n()) {
      throw Error(ErrorCode::kIndexRange, "element index out of range");
    }
    *out = copy_string(input->input.at(index).to_string());
    return PB_OK;
  });
}

pb_status pb_input_carrier(const pb_input* input, char** out) {
  return guarded([&] {
    require(input, "input");
    require(out, "out");
    *out = copy_string(input->input.carrier().name());
    return PB_OK;
  });
}

void pb_input_free(pb_input* input) { delete input; }

pb_status pb_matching_parse(const char* text, pb_matching** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new pb_matching{parse_matching(text)};
    return PB_OK;
  });
}

pb_status pb_matching_symmetric(size_t n, pb_matching** out) {
  return guarded([&] {
    require(out, "out");
    *out = new pb_matching{symmetric_matching(n)};
    return PB_OK;
  });
}

size_t pb_matching_n(const pb_matching* m) { return m ? m->matching.n() : 0; }

pb_status pb_matching_to_string(const pb_matching* m, char** out) {
  return guarded([&] {
    require(m, "matching");
    require(out, "out");
    *out = copy_string(m->matching.to_string());
    return PB_OK;
  });
}

void pb_matching_free(pb_matching* m) { delete m; }

pb_status pb_enumerator_create(size_t n, pb_enumerator** out) {
  return guarded([&] {
    require(out, "out");
    *out = new pb_enumerator{MatchingEnumerator(n), std::nullopt};
    return PB_OK;
  });
}

int pb_enumerator_next(pb_enumerator* e, const pb_matching** current) {
  if (!e || !e->stream.next()) return 0;
  e->current.emplace(pb_matching{e->stream.current()});
  if (current) *current = &*e->current;
  return 1;
}

void pb_enumerator_free(pb_enumerator* e) { delete e; }

pb_status pb_count_matchings(size_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = copy_string(count_matchings(n).str());
    return PB_OK;
  });
}

pb_status pb_feasible(const pb_input* input, const char* bound, const char* direction,
                      const pb_matching* m, int* out) {
  return guarded([&] {
    require(m, "matching");
    require(out, "out");
    *out = feasible(m->matching, make_instance(input, bound, direction)) ? 1 : 0;
    return PB_OK;
  });
}

pb_status pb_render_table(const pb_input* input, pb_format format, size_t cap, char** out) {
  return guarded([&] {
    require(input, "input");
    require(out, "out");
    *out = copy_string(render_table(input->input, to_format(format), effective_cap(cap)));
    return PB_OK;
  });
}

pb_status pb_solve(const pb_input* input, const char* bound, const char* direction,
                   const pb_matching* witness, pb_format format, size_t cap, char** out) {
  return guarded([&] {
    require(input, "input");
    require(out, "out");
    std::optional<FeasibilitySection> section;
    pb_status status = PB_OK;
    if (bound) {
      BoundingInstance inst = make_instance(input, bound, direction);
      std::optional<Matching> w;
      bool symmetric_ok = false;
      if (witness) {
        TheoremCheck check = theorem_check(inst, witness->matching);
        symmetric_ok = check.holds;
        w = witness->matching;
        if (!check.holds) status = PB_THEOREM_VIOLATION;
      } else {
        symmetric_ok = feasible(symmetric_matching(inst.n()), inst);
      }
      section = FeasibilitySection{std::move(inst), std::move(w), symmetric_ok};
    } else if (witness) {
      throw Error(ErrorCode::kInvalidArgument, "a witness needs a bound");
    }
    OracleOptions options;
    options.cap = effective_cap(cap);
    const OptimalityReport report = optimality_report(input->input, options);
    if (!report.passed()) status = PB_THEOREM_VIOLATION;
    *out = copy_string(render_solve(input->input, report, section, to_format(format)));
    if (status == PB_THEOREM_VIOLATION) {
      last_error = "the symmetric matching failed a bounding check; see the report";
    }
    return status;
  });
}

pb_status pb_certify(const pb_input* input, const char* bound, const char* direction,
                     const pb_matching* witness, pb_certificate** out) {
  return guarded([&] {
    require(witness, "witness");
    require(out, "out");
    BoundingInstance inst = make_instance(input, bound, direction);
    *out = new pb_certificate{exchange_transform(witness->matching, inst)};
    return PB_OK;
  });
}

pb_status pb_certificate_parse(const char* json, pb_certificate** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new pb_certificate{certificate_from_json(json)};
    return PB_OK;
  });
}

pb_status pb_certificate_load(const char* path, pb_certificate** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kParse, std::string("cannot open certificate '") + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = new pb_certificate{certificate_from_json(buffer.str())};
    return PB_OK;
  });
}

pb_status pb_certificate_to_json(const pb_certificate* cert, char** out) {
  return guarded([&] {
    require(cert, "certificate");
    require(out, "out");
    *out = copy_string(certificate_to_json(cert->cert));
    return PB_OK;
  });
}

size_t pb_certificate_step_count(const pb_certificate* cert) {
  return cert ? cert->cert.steps.size() : 0;
}

pb_status pb_certificate_verify(const pb_certificate* cert, char** reason) {
  return guarded([&] {
    require(cert, "certificate");
    const VerificationResult result = verify_certificate(cert->cert);
    if (reason) *reason = result.valid ? nullptr : copy_string(result.reason);
    if (result.valid) return PB_OK;
    last_error = result.reason;
    return PB_VERIFICATION_FAILED;
  });
}

void pb_certificate_free(pb_certificate* cert) { delete cert; }

pb_status pb_lawcheck(const char* op, size_t dim, size_t samples, uint64_t seed,
                      pb_format format, char** out, size_t* violations) {
  return guarded([&] {
    require(out, "out");
    const std::string name = op ? op : "all";
    std::vector<Carrier> carriers;
    if (name == "all") {
      carriers = {Carrier::integer_add(), Carrier::rational_add(), Carrier::positive_rational_mul()};
    } else if (name != "lexadd") {
      carriers = {Carrier::from_name(name, dim)};
    }
    if (name == "all" || name == "lexadd") {
      if (dim != 0) {
        carriers.push_back(Carrier::natural_vector_lex_add(dim));
      } else {
        for (std::size_t d = 1; d <= 3; ++d) carriers.push_back(Carrier::natural_vector_lex_add(d));
      }
    }
    std::vector<LawReport> reports;
    std::size_t total = 0;
    for (std::size_t k = 0; k < carriers.size(); ++k) {
      reports.push_back(run_law_checks(carriers[k], samples, seed + k));
      total += reports.back().total_violations();
    }
    *out = copy_string(render_law_reports(reports, seed, to_format(format)));
    if (violations) *violations = total;
    return total == 0 ? PB_OK : PB_VERIFICATION_FAILED;
  });
}

}  // extern "C"
