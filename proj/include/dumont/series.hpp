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

// Truncated exponential generating functions sum_n c_n t^n / n! with
// Laurent-polynomial coefficients.

#include <span>
#include <vector>

#include "dumont/grammar.hpp"
#include "dumont/poly.hpp"

namespace dumont {

class TruncatedEgf {
 public:
  /// The zero series of the given order.
  explicit TruncatedEgf(unsigned order) : coeffs_(order + 1) {}
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit TruncatedEgf(std::vector<Polynomial> coeffs);

  static TruncatedEgf constant(const Polynomial& c, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  /// Coefficient of t^n / n!.
  const Polynomial& operator[](std::size_t n) const { return coeffs_[n]; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  TruncatedEgf& operator+=(const TruncatedEgf& o);
  TruncatedEgf& operator-=(const TruncatedEgf& o);
  TruncatedEgf& operator*=(const Polynomial& c);

  friend TruncatedEgf operator+(TruncatedEgf p, const TruncatedEgf& q) { return p += q; }
  friend TruncatedEgf operator-(TruncatedEgf p, const TruncatedEgf& q) { return p -= q; }
  friend TruncatedEgf operator*(const Polynomial& c, TruncatedEgf p) { return p *= c; }
  friend TruncatedEgf operator*(const TruncatedEgf& p, const TruncatedEgf& q);

  friend bool operator==(const TruncatedEgf&, const TruncatedEgf&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

/// gen(w, t) truncated at t^order: coefficient n is D^n(w).
TruncatedEgf gen_from_grammar(const Grammar& g, const Polynomial& w, unsigned order);

/// e^{ct}: coefficient n is c^n.
TruncatedEgf exp_series(const Polynomial& c, unsigned order);

/// Binomial convolution; both operands must share an order.
TruncatedEgf mul_series(const TruncatedEgf& p, const TruncatedEgf& q);

/// A polynomial prefactor times a product of series.
struct SeriesProduct {
  Polynomial prefactor = 1;
  std::vector<TruncatedEgf> factors;

  /// Fully expanded product at the given order.
  TruncatedEgf expand(unsigned order) const;
};

/// True iff both cross-multiplied sides agree coefficient by coefficient.
/// Every factor on both sides must have the same order.
bool check_identity_crossmul(const SeriesProduct& lhs, const SeriesProduct& rhs);

/// Coefficients n/d solved term by term from the constant term of d.
/// Used to read off a closed form's coefficients; d[0] must divide exactly.
TruncatedEgf solve_quotient(const TruncatedEgf& numerator, const TruncatedEgf& denominator);

mpz_class binomial(unsigned n, unsigned k);

}  // namespace dumont
