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

#include "dumont/series.hpp"

#include "dumont/error.hpp"

namespace dumont {

namespace {

void require_same_order(const TruncatedEgf& p, const TruncatedEgf& q) {
  if (p.order() != q.order())
    throw OrderMismatch("series orders differ: " + std::to_string(p.order()) + " vs " + std::to_string(q.order()));
}

}  // namespace

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

TruncatedEgf::TruncatedEgf(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw OrderMismatch("a truncated series needs at least one coefficient");
}

TruncatedEgf TruncatedEgf::constant(const Polynomial& c, unsigned order) {
  TruncatedEgf s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedEgf& TruncatedEgf::operator+=(const TruncatedEgf& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TruncatedEgf& TruncatedEgf::operator-=(const TruncatedEgf& o) {
  require_same_order(*this, o);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TruncatedEgf& TruncatedEgf::operator*=(const Polynomial& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncatedEgf operator*(const TruncatedEgf& p, const TruncatedEgf& q) { return mul_series(p, q); }

TruncatedEgf mul_series(const TruncatedEgf& p, const TruncatedEgf& q) {
  require_same_order(p, q);
  std::vector<Polynomial> out(p.order() + 1);
  for (unsigned n = 0; n <= p.order(); ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      if (p[k].is_zero() || q[n - k].is_zero()) continue;
      out[n] += Polynomial(Rational(binomial(n, k))) * p[k] * q[n - k];
    }
  }
  return TruncatedEgf(std::move(out));
}

TruncatedEgf gen_from_grammar(const Grammar& g, const Polynomial& w, unsigned order) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(w);
  for (unsigned n = 1; n <= order; ++n) coeffs.push_back(derive(g, coeffs.back()));
  return TruncatedEgf(std::move(coeffs));
}

TruncatedEgf exp_series(const Polynomial& c, unsigned order) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(order + 1);
  coeffs.emplace_back(1);
  for (unsigned n = 1; n <= order; ++n) coeffs.push_back(coeffs.back() * c);
  return TruncatedEgf(std::move(coeffs));
}

TruncatedEgf SeriesProduct::expand(unsigned order) const {
  TruncatedEgf acc = TruncatedEgf::constant(prefactor, order);
  for (const auto& f : factors) acc = mul_series(acc, f);
  return acc;
}

bool check_identity_crossmul(const SeriesProduct& lhs, const SeriesProduct& rhs) {
  std::vector<const TruncatedEgf*> all;
  for (const auto& f : lhs.factors) all.push_back(&f);
  for (const auto& f : rhs.factors) all.push_back(&f);
  if (all.empty()) return lhs.prefactor == rhs.prefactor;
  unsigned order = all.front()->order();
  for (const auto* f : all) require_same_order(*all.front(), *f);
  return lhs.expand(order) == rhs.expand(order);
}

TruncatedEgf solve_quotient(const TruncatedEgf& numerator, const TruncatedEgf& denominator) {
  require_same_order(numerator, denominator);
  if (denominator[0].is_zero()) throw NonExactDivision("denominator series has zero constant term");
  std::vector<Polynomial> c;
  c.reserve(numerator.order() + 1);
  for (unsigned n = 0; n <= numerator.order(); ++n) {
    // N_n = sum_k C(n,k) Q_{n-k} c_k, solved for c_n.
    Polynomial rest = numerator[n];
    for (unsigned k = 0; k < n; ++k)
      rest -= Polynomial(Rational(binomial(n, k))) * denominator[n - k] * c[k];
    c.push_back(divide_exact(rest, denominator[0]));
  }
  return TruncatedEgf(std::move(c));
}

}  // namespace dumont
