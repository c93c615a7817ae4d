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

// Exact multivariate Laurent polynomials over the fixed variables
// a, b, x, y, z with rational coefficients.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "json.hpp"

namespace dumont {

using Rational = mpq_class;

enum class Var : std::uint8_t { a = 0, b, x, y, z };

inline constexpr std::array<Var, 5> kAllVars = {Var::a, Var::b, Var::x, Var::y, Var::z};

char var_name(Var v);
std::optional<Var> var_from_char(char c);

/// A product of signed powers of the five variables.
///
/// Storage is dense; an exponent of zero means the variable is absent, so
/// two monomials compare equal iff they have the same nonzero exponents.
/// The ordering is lexicographic over (a, b, x, y, z) exponents and fixes
/// the printed term order.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, int exponent = 1);

  int exponent(Var v) const { return exps_[index(v)]; }
  void set_exponent(Var v, int e) { exps_[index(v)] = e; }

  bool is_one() const;
  int total_degree() const;

  Monomial inverse() const;
  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o);

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  /// `x^2y`, `ax^-1`, or `1` for the unit monomial.
  std::string to_string() const;

 private:
  static constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }
  std::array<int, 5> exps_{};
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(const Monomial& m, const Rational& c = 1);

  /// Drops zero coefficients from an arbitrary term map.
  static Polynomial from_terms(Terms terms);
  static Polynomial var(Var v, int exponent = 1);

  /// Reads the text form produced by to_string(), plus `*`, parentheses
  /// and nonnegative integer powers of parenthesized groups.
  static Polynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;

  /// The (monomial, coefficient) pair when this is a single nonzero term.
  std::optional<std::pair<Monomial, Rational>> as_term() const;

  /// Returns a copy re-normalized from its own terms; a no-op on valid values.
  Polynomial normalized() const { return from_terms(terms_); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial operator-() const;

  /// Integer power; negative powers are allowed only for single terms.
  Polynomial pow(int k) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.terms_ == q.terms_; }

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  Terms terms_;
};

using Bindings = std::map<Var, Polynomial>;

/// Simultaneous substitution of variables.  A variable occurring with a
/// negative exponent may only be bound to a single nonzero term.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

Rational coefficient_of(const Polynomial& p, const Monomial& m);

/// Exact quotient p / d.  Throws NonExactDivision when d does not divide p.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

std::string rational_to_string(const Rational& r);

}  // namespace dumont
