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
#include "dumont/poly.hpp"
#include "support.hpp"

using namespace dumont;

namespace {

Polynomial random_poly(std::mt19937& rng, bool laurent = false) {
  std::uniform_int_distribution<int> terms(0, 20), coeff(-6, 6), den(1, 3);
  std::uniform_int_distribution<int> exp(laurent ? -3 : 0, 3);
  Polynomial p;
  for (int k = terms(rng); k > 0; --k) {
    Monomial m;
    for (Var v : kAllVars) m.set_exponent(v, exp(rng) * (rng() % 2));
    p.add_term(m, Rational(coeff(rng), den(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("monomial text and ordering") {
  CHECK(Monomial().to_string() == "1");
  CHECK(Monomial::of(Var::x, 2).to_string() == "x^2");
  Monomial m = Monomial::of(Var::a) * Monomial::of(Var::x, -1);
  CHECK(m.to_string() == "ax^-1");
  CHECK(m.inverse() * m == Monomial());
  CHECK(Monomial::of(Var::z, 3).total_degree() == 3);
  // lexicographic over (a, b, x, y, z)
  CHECK(Monomial::of(Var::z, 5) < Monomial::of(Var::y));
  CHECK(Monomial::of(Var::y) < Monomial::of(Var::x));
}

TEST_CASE("rendering is canonical") {
  CHECK(Polynomial().to_string() == "0");
  CHECK(Polynomial(1).to_string() == "1");
  CHECK(Polynomial::parse("x^2y + 3xyz + xy^2 + z^3").to_string() == "z^3 + 3xyz + xy^2 + x^2y");
  CHECK(Polynomial::parse("-x + 1").to_string() == "1 - x");
  CHECK(Polynomial::parse("3/2 xy").to_string() == "(3/2)xy");
  CHECK(Polynomial::parse("-1/2").to_string() == "-1/2");
  CHECK(Polynomial::parse("x - x").to_string() == "0");
}

TEST_CASE("parser accepts products, groups and signed exponents") {
  CHECK(Polynomial::parse("a*b") == Polynomial::parse("ab"));
  CHECK(Polynomial::parse("(x + y)^2") == Polynomial::parse("x^2 + 2xy + y^2"));
  CHECK(Polynomial::parse("a x^-1") == Polynomial::var(Var::a) * Polynomial::var(Var::x, -1));
  CHECK(Polynomial::parse("2(z - y)") == Polynomial::parse("2z - 2y"));
  CHECK_THROWS_AS(Polynomial::parse("x +"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("q"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("(x"), ParseError);
  CHECK_THROWS_AS(Polynomial::parse(""), ParseError);
}

TEST_CASE("text round trip on random polynomials") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial p = random_poly(rng, true);
    CHECK(Polynomial::parse(p.to_string()) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(2026);
  for (int i = 0; i < 100; ++i) {
    Polynomial p = random_poly(rng, true), q = random_poly(rng, true), r = random_poly(rng, true);
    CHECK(p + q == q + p);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + Polynomial() == p);
    CHECK(p * Polynomial(1) == p);
    CHECK((p - p).is_zero());
    CHECK(p + (-p) == Polynomial());
    CHECK((p * q).normalized() == p * q);
    CHECK((p + r).normalized() == p + r);
  }
}

TEST_CASE("no zero coefficients are stored") {
  Polynomial p = Polynomial::parse("x + y");
  p -= Polynomial::parse("x");
  CHECK(p.size() == 1);
  CHECK(p.coefficient(Monomial::of(Var::x)) == 0);
  p.add_term(Monomial::of(Var::y), -1);
  CHECK(p.is_zero());
}

TEST_CASE("powers") {
  Polynomial p = Polynomial::parse("1 + x");
  CHECK(p.pow(0) == Polynomial(1));
  CHECK(p.pow(3) == Polynomial::parse("1 + 3x + 3x^2 + x^3"));
  CHECK(Polynomial::parse("2x").pow(-2) == Polynomial::parse("1/4 x^-2"));
  CHECK_THROWS_AS(p.pow(-1), NonInvertibleSubstitution);
}

TEST_CASE("substitution") {
  Polynomial p = Polynomial::parse("abz + axy");
  Bindings at{{Var::a, 1}, {Var::y, 1}, {Var::b, Polynomial::var(Var::x)}, {Var::z, Polynomial::parse("xz")}};
  CHECK(substitute(p, at) == Polynomial::parse("x^2z + x"));
  CHECK(substitute(Polynomial::parse("ax^-1"), {{Var::x, Polynomial::parse("2y")}}) == Polynomial::parse("1/2 a y^-1"));
  CHECK_THROWS_AS(substitute(Polynomial::parse("x^-1"), {{Var::x, Polynomial::parse("1 + y")}}),
                  NonInvertibleSubstitution);
  CHECK_THROWS_AS(substitute(Polynomial::parse("x^-1"), {{Var::x, Polynomial()}}), NonInvertibleSubstitution);
  // Substitution is a ring homomorphism.
  std::mt19937 rng(5);
  Bindings b{{Var::x, Polynomial::parse("y + 2")}, {Var::z, Polynomial::parse("xz")}};
  for (int i = 0; i < 30; ++i) {
    Polynomial f = random_poly(rng), g = random_poly(rng);
    CHECK(substitute(f * g, b) == substitute(f, b) * substitute(g, b));
    CHECK(substitute(f + g, b) == substitute(f, b) + substitute(g, b));
  }
}

TEST_CASE("coefficient extraction") {
  Polynomial f4 = Polynomial::parse("6xyz^2 + 4xy^2z + xy^3 + 4x^2yz + 7x^2y^2 + x^3y + z^4");
  Monomial m;
  m.set_exponent(Var::x, 2);
  m.set_exponent(Var::y, 2);
  CHECK(coefficient_of(f4, m) == 7);
  CHECK(coefficient_of(f4, Monomial::of(Var::a)) == 0);
}

TEST_CASE("exact division") {
  std::mt19937 rng(77);
  for (int i = 0; i < 60; ++i) {
    Polynomial p = random_poly(rng, true), d = random_poly(rng, true);
    if (d.is_zero()) continue;
    CHECK(divide_exact(p * d, d) == p);
  }
  CHECK(divide_exact(Polynomial(1), Polynomial::var(Var::x)) == Polynomial::var(Var::x, -1));
  CHECK_THROWS_AS(divide_exact(Polynomial(1), Polynomial::parse("1 + x")), NonExactDivision);
  CHECK_THROWS_AS(divide_exact(Polynomial(1), Polynomial()), NonExactDivision);
}

TEST_CASE("json form") {
  auto j = Polynomial::parse("3/2 x^2 y - z").to_json();
  REQUIRE(j.size() == 2);
  CHECK(j[0]["coeff_num"] == -1);
  CHECK(j[0]["exponents"]["z"] == 1);
  CHECK(j[1]["coeff_num"] == 3);
  CHECK(j[1]["coeff_den"] == 2);
}
