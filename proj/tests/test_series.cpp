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


#include <doctest.h>

#include <random>

#include "dumont/error.hpp"
#include "dumont/grammar.hpp"
#include "dumont/identities.hpp"
#include "dumont/series.hpp"
#include "support.hpp"

using namespace dumont;

TEST_CASE("exponential series and binomial convolution") {
  Polynomial x = Polynomial::var(Var::x), y = Polynomial::var(Var::y);
  TruncatedEgf ex = exp_series(x, 6);
  for (unsigned n = 0; n <= 6; ++n) CHECK(ex[n] == x.pow(static_cast<int>(n)));
  CHECK(mul_series(ex, exp_series(y, 6)) == exp_series(x + y, 6));
  CHECK(mul_series(ex, exp_series(-x, 6)) == TruncatedEgf::constant(1, 6));
  CHECK(ex * TruncatedEgf::constant(1, 6) == ex);
  CHECK((ex - ex) == TruncatedEgf(6));
}

TEST_CASE("order mismatches are rejected") {
  TruncatedEgf p(3), q(4);
  CHECK_THROWS_AS(p + q, OrderMismatch);
  CHECK_THROWS_AS(mul_series(p, q), OrderMismatch);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
}

TEST_CASE("grammar series is a ring homomorphism") {
  Grammar gd = Grammar::dumont();
  TruncatedEgf ga = gen_from_grammar(gd, Polynomial::var(Var::a), 6);
  for (unsigned n = 0; n <= 6; ++n) CHECK(ga[n] == derive_n(gd, Polynomial::var(Var::a), n));
  TruncatedEgf gx = gen_from_grammar(gd, Polynomial::var(Var::x), 6);
  TruncatedEgf gw = gen_from_grammar(gd, Polynomial::parse("ax^-1"), 6);
  CHECK(gx * gw == ga);
  // a x^-1 (z - y)^n means gen(a x^-1) = a x^-1 e^{(z-y)t}
  CHECK(gw == Polynomial::parse("ax^-1") * exp_series(Polynomial::parse("z - y"), 6));
}

TEST_CASE("grammar series of a product is the product of series") {
  std::mt19937 rng(17);
  auto word = [&rng](bool with_b) {
    Monomial m;
    for (Var v : kAllVars)
      if (v != Var::b || with_b) m.set_exponent(v, static_cast<int>(rng() % 4) - 1);
    return Polynomial(m);
  };
  for (const Grammar& g : {Grammar::dumont(), Grammar::dumont_b()}) {
    for (int i = 0; i < 10; ++i) {
      Polynomial u = word(true), v = word(true);
      CHECK(gen_from_grammar(g, u * v, 6) == mul_series(gen_from_grammar(g, u, 6), gen_from_grammar(g, v, 6)));
    }
  }
}

TEST_CASE("every closed form holds to order 8 from both sources") {
  for (const auto& id : identity_ids()) {
    for (auto source : {CoefficientSource::grammar, CoefficientSource::enumeration}) {
      CAPTURE(id);
      ClosedFormIdentity ident = closed_form_identity(id, 8, source);
      CHECK(ident.holds());
      CHECK(ident.closed_form_coefficients() == ident.generated);
    }
  }
}

TEST_CASE("grammar and enumeration sources agree") {
  for (const auto& id : identity_ids()) {
    CAPTURE(id);
    CHECK(closed_form_identity(id, 6, CoefficientSource::grammar).generated ==
          closed_form_identity(id, 6, CoefficientSource::enumeration).generated);
  }
}

TEST_CASE("cross-multiplication detects a wrong closed form") {
  ClosedFormIdentity ident = closed_form_identity("fsg-2", 5, CoefficientSource::grammar);
  SeriesProduct lhs{1, {ident.generated, ident.denominator}};
  SeriesProduct rhs{1, {ident.numerator}};
  CHECK(check_identity_crossmul(lhs, rhs));
  SeriesProduct wrong{Polynomial::parse("1 + x"), {ident.numerator}};
  CHECK_FALSE(check_identity_crossmul(lhs, wrong));
  std::vector<Polynomial> c = ident.generated.coeffs();
  c[4] += Polynomial::parse("xyz");
  ident.generated = TruncatedEgf(c);
  CHECK_FALSE(ident.holds());
}

TEST_CASE("closed-form coefficients match the printed tables") {
  auto f = closed_form_identity("fsg-2", 4, CoefficientSource::grammar).closed_form_coefficients();
  auto f_rows = golden::table("F.txt");
  for (unsigned n = 0; n <= 4; ++n) CHECK(f[n].to_string() == f_rows[n]);

  auto p = closed_form_identity("gpn", 3, CoefficientSource::grammar).closed_form_coefficients();
  auto p_rows = golden::table("P.txt");
  for (unsigned n = 0; n <= 3; ++n) CHECK(p[n].to_string() == p_rows[n + 1]);

  auto ps = closed_form_identity("gpstar", 4, CoefficientSource::grammar).closed_form_coefficients();
  auto ps_rows = golden::table("Pstar.txt");
  for (unsigned n = 0; n <= 4; ++n) CHECK(ps[n].to_string() == ps_rows[n]);

  auto g0 = closed_form_identity("gpstar", 0, CoefficientSource::grammar).closed_form_coefficients();
  CHECK(g0.order() == 0);
  CHECK(g0[0] == Polynomial(1));

  // x^exc z^fix: substitute y = 1 into F_n
  auto fxz = closed_form_identity("fxz", 4, CoefficientSource::enumeration).closed_form_coefficients();
  for (unsigned n = 0; n <= 4; ++n)
    CHECK(fxz[n] == substitute(Polynomial::parse(f_rows[n]), {{Var::y, 1}}));
}

TEST_CASE("term-by-term quotient") {
  TruncatedEgf ex = exp_series(Polynomial::var(Var::x), 5);
  CHECK(solve_quotient(ex, ex) == TruncatedEgf::constant(1, 5));
  TruncatedEgf num = mul_series(ex, exp_series(Polynomial::var(Var::y), 5));
  CHECK(solve_quotient(num, ex) == exp_series(Polynomial::var(Var::y), 5));
  CHECK_THROWS_AS(solve_quotient(ex, TruncatedEgf(5)), NonExactDivision);
}

TEST_CASE("identity lookup errors") {
  CHECK_THROWS_AS(closed_form_identity("gfoo", 3, CoefficientSource::grammar), UnknownIdentity);
  CHECK_THROWS_AS(closed_form_identity("fsg-2", 10, CoefficientSource::enumeration), SizeTooLarge);
  CHECK_THROWS_AS(closed_form_identity("gpn", 9, CoefficientSource::enumeration), SizeTooLarge);
  CHECK_NOTHROW(closed_form_identity("gpn", 10, CoefficientSource::grammar));
}
