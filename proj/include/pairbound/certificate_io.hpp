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

// Certificate documents.
//
// A certificate is written as JSON with a fixed key order so that files are
// byte-stable and diffable:
//
//   {
//     "instance": {"carrier": "add", "elements": ["1", ...],
//                  "bound": "10", "direction": "upper"},
//     "witness": "(1,4)(2,6)(3,5)",
//     "steps": [{"level": 1, "ell": 4, "ell_prime": 2,
//                "removed": ["(1,4)", "(2,6)"], "inserted": ["(1,6)", "(2,4)"],
//                "justifications": [{"lhs": "(2,4)", "lhs_value": "6",
//                                    "relation": "<", "rhs": "N",
//                                    "rhs_value": "10"}, ...]}],
//     "final": "(1,6)(2,5)(3,4)"
//   }
//
// Elements use the carrier's literal forms and matchings the "(i,j)..." form.

#ifndef PAIRBOUND_CERTIFICATE_IO_HPP_
#define PAIRBOUND_CERTIFICATE_IO_HPP_

#include <string>
#include <string_view>

#include "pairbound/bounding.hpp"

namespace pairbound {

std::string certificate_to_json(const Certificate& cert);

// Throws kParse for malformed documents, including element lists that are not
// already in ascending order (reordering would silently change indices).
// Semantic checks are left to verify_certificate.
Certificate certificate_from_json(std::string_view text);

}  // namespace pairbound

#endif  // PAIRBOUND_CERTIFICATE_IO_HPP_
