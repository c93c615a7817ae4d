/* Copyright 2026 The dumont-grammar Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dumont/bijection.hpp"

namespace dumont {

enum class CheckStatus { pass, fail };

struct Check {
  std::string name;     // "<suite>/<check>"
  std::string anchor;   // the statement being checked
  std::string n_range;  // e.g. "0..7"
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

enum class Suite { all, grammar, series, bijection, identities };

/// Throws std::invalid_argument on an unknown name.
Suite parse_suite(std::string_view name);

struct VerificationReport {
  int max_n = 0;
  std::vector<Check> checks;  // sorted by name
  std::optional<BijectionReport> table;  // small-n bijection table, when requested

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

/// Runs every check of the suite for sizes up to max_n (1..9).
/// Exceptions inside a check become failed rows.
VerificationReport run_verification(Suite suite, int max_n);

}  // namespace dumont
