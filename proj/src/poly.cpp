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

#include "dumont/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dumont/error.hpp"

namespace dumont {

char var_name(Var v) {
  static constexpr std::array<char, 5> names = {'a', 'b', 'x', 'y', 'z'};
  return names[static_cast<std::size_t>(v)];
}

std::optional<Var> var_from_char(char c) {
  switch (c) {
    case 'a': return Var::a;
    case 'b': return Var::b;
    case 'x': return Var::x;
    case 'y': return Var::y;
    case 'z': return Var::z;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, int exponent) {
  Monomial m;
  m.set_exponent(v, exponent);
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::total_degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::inverse() const {
  Monomial m;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] = -exps_[i];
  return m;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
  return *this;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  return m *= o;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (Var v : kAllVars) {
    int e = exponent(v);
    if (e == 0) continue;
    out += var_name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

// mpq values built from a numerator/denominator pair are not reduced.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

}  // namespace

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, canonical(c));
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, canonical(c));
}

Polynomial Polynomial::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  for (auto& kv : terms) kv.second.canonicalize();
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::var(Var v, int exponent) { return Polynomial(Monomial::of(v, exponent)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::pair<Monomial, Rational>> Polynomial::as_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, canonical(c));
  if (inserted) return;
  it->second += canonical(c);
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= canonical(c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) {
    auto term = as_term();
    if (!term) throw NonInvertibleSubstitution("negative power of a non-monomial: " + to_string());
    Rational inv = 1 / term->second;
    return Polynomial(term->first.inverse(), inv).pow(-k);
  }
  Polynomial result = 1;
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += m.to_string();
    } else if (mag.get_den() == 1) {
      out += rational_to_string(mag) + m.to_string();
    } else {
      out += "(" + rational_to_string(mag) + ")" + m.to_string();
    }
  }
  return out;
}

namespace {

nlohmann::json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

nlohmann::json Polynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json exps = nlohmann::json::object();
    for (Var v : kAllVars)
      if (m.exponent(v) != 0) exps[std::string(1, var_name(v))] = m.exponent(v);
    out.push_back({{"coeff_num", integer_json(c.get_num())},
                   {"coeff_den", integer_json(c.get_den())},
                   {"exponents", exps}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || var_from_char(c).has_value();
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    Polynomial t = term();
    acc += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      negate = text_[pos_++] == '-';
      t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  Polynomial term() {
    if (!starts_factor(peek())) fail("expected a term");
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        if (!starts_factor(peek())) fail("expected a factor after '*'");
        acc *= factor();
      } else if (starts_factor(c)) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    mpz_class e = integer();
    if (!e.fits_sint_p()) fail("exponent out of range");
    return negative ? -static_cast<int>(e.get_si()) : static_cast<int>(e.get_si());
  }

  Polynomial factor() {
    char c = peek();
    Polynomial base;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      Rational r(num, den);
      r.canonicalize();
      return Polynomial(r);
    }
    if (c == '(') {
      ++pos_;
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      base = Polynomial::var(*var_from_char(c));
      ++pos_;
    }
    if (peek() == '^') {
      ++pos_;
      int e = exponent();
      try {
        return base.pow(e);
      } catch (const NonInvertibleSubstitution&) {
        fail("negative power of a sum");
      }
    }
    return base;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Free operations

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  // Cache of bound-variable powers keyed by (variable, exponent).
  std::map<std::pair<Var, int>, Polynomial> powers;
  auto power = [&](Var v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const Polynomial& image = bindings.at(v);
    if (e < 0 && !image.as_term())
      throw NonInvertibleSubstitution(std::string("variable ") + var_name(v) +
                                      " has a negative exponent but is bound to " + image.to_string());
    return powers.emplace(key, image.pow(e)).first->second;
  };

  Polynomial result;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest;
    Polynomial product(c);
    for (Var v : kAllVars) {
      int e = m.exponent(v);
      if (e == 0) continue;
      if (bindings.contains(v)) {
        product *= power(v, e);
      } else {
        rest.set_exponent(v, e);
      }
    }
    for (const auto& [pm, pc] : product.terms()) result.add_term(pm * rest, pc);
  }
  return result;
}

Rational coefficient_of(const Polynomial& p, const Monomial& m) { return p.coefficient(m); }

Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw NonExactDivision("division by zero polynomial");
  if (p.is_zero()) return {};

  // Divide out the monomial content of both operands; the remaining
  // quotient (if any) is then an ordinary polynomial and multivariate
  // division under the lexicographic term order finds it exactly.
  auto low_corner = [](const Polynomial& q) {
    Monomial lo;
    for (Var v : kAllVars) {
      int e = q.terms().begin()->first.exponent(v);
      for (const auto& kv : q.terms()) e = std::min(e, kv.first.exponent(v));
      lo.set_exponent(v, e);
    }
    return lo;
  };
  Monomial shift_p = low_corner(p);
  Monomial shift_d = low_corner(d);
  Polynomial rem = p * Polynomial(shift_p.inverse());
  Polynomial div = d * Polynomial(shift_d.inverse());
  const auto& [lead_m, lead_c] = *div.terms().rbegin();

  Polynomial quotient;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    Monomial qm = rm * lead_m.inverse();
    for (Var v : kAllVars)
      if (qm.exponent(v) < 0)
        throw NonExactDivision(d.to_string() + " does not divide " + p.to_string());
    Polynomial step(qm, rc / lead_c);
    quotient += step;
    rem -= step * div;
  }
  return quotient * Polynomial(shift_p * shift_d.inverse());
}

}  // namespace dumont
