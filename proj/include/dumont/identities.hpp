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

// Catalog of closed-form generating functions, each stated in
// cross-multiplied form: generated(t) * denominator(t) = numerator(t).

#include <string>
#include <string_view>
#include <vector>

#include "dumont/series.hpp"

namespace dumont {

enum class CoefficientSource {
  grammar,      // iterated formal derivatives
  enumeration,  // exhaustive sums over S_n
};

struct ClosedFormIdentity {
  std::string id;
  std::string formula;
  std::string generated_by;
  TruncatedEgf generated;
  TruncatedEgf numerator;
  TruncatedEgf denominator;

  /// generated * denominator == numerator, coefficient by coefficient.
  bool holds() const;
  /// The closed form's own coefficients, numerator / denominator.
  TruncatedEgf closed_form_coefficients() const;
};

/// fxz, fsg-2, gat, gpstar, gpn, genab, eulerian.
const std::vector<std::string>& identity_ids();

/// Throws UnknownIdentity, or SizeTooLarge when the enumeration source
/// would need S_n beyond the enumeration guard.
ClosedFormIdentity closed_form_identity(std::string_view id, unsigned order, CoefficientSource source);

}  // namespace dumont
