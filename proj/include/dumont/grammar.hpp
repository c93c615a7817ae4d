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

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "dumont/poly.hpp"

namespace dumont {

/// A context-free grammar in the substitution-rule sense: each variable is
/// mapped to a polynomial, and the induced derivation D sends v to its rule.
/// Variables without a rule are constants.
class Grammar {
 public:
  Grammar() = default;

  Grammar& set_rule(Var v, Polynomial image);
  const std::optional<Polynomial>& rule(Var v) const { return rules_[static_cast<std::size_t>(v)]; }

  /// {a -> az, z -> xy, x -> xy, y -> xy}
  static Grammar dumont();
  /// {a -> az, b -> xy, x -> xy, y -> xy, z -> xy}
  static Grammar dumont_b();
  /// {x -> xy, y -> xy}
  static Grammar eulerian();

  /// Built-in grammars: "dumont", "dumont-b", "eulerian".
  static Grammar by_name(std::string_view name);

  /// One rule per line, `a -> a*z`.  Blank lines and `#` comments are skipped.
  static Grammar parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const Grammar&, const Grammar&) = default;

 private:
  std::array<std::optional<Polynomial>, 5> rules_;
};

/// The formal derivative of p.  Negative powers follow D(v^k) = k v^(k-1) D(v).
Polynomial derive(const Grammar& g, const Polynomial& p);

Polynomial derive_n(const Grammar& g, Polynomial p, unsigned n);

bool is_constant(const Grammar& g, const Polynomial& p);

/// Bivariate Eulerian polynomial A_n(x, y) = D^n(x) under {x -> xy, y -> xy}.
/// A_0 = x.
Polynomial eulerian(unsigned n);

}  // namespace dumont
