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

#include "dumont/identities.hpp"

#include <functional>

#include "dumont/error.hpp"
#include "dumont/perms.hpp"

namespace dumont {

namespace {

Polynomial v(Var var) { return Polynomial::var(var); }

TruncatedEgf series_from(unsigned order, const std::function<Polynomial(unsigned)>& coeff) {
  std::vector<Polynomial> c;
  for (unsigned n = 0; n <= order; ++n) c.push_back(coeff(n));
  return TruncatedEgf(std::move(c));
}

void require_enumerable(unsigned largest_n) {
  if (largest_n > static_cast<unsigned>(kMaxEnumerationSize))
    throw SizeTooLarge("enumeration source needs S_" + std::to_string(largest_n) + "; the limit is S_" +
                       std::to_string(kMaxEnumerationSize));
}

Polynomial enumerate(unsigned n, std::initializer_list<StatVar> spec) {
  std::vector<StatVar> s(spec);
  return distribution(static_cast<int>(n), s);
}

// y e^{xt} - x e^{yt}
TruncatedEgf homogeneous_denominator(unsigned order) {
  return v(Var::y) * exp_series(v(Var::x), order) - v(Var::x) * exp_series(v(Var::y), order);
}

// e^{xt} - x e^t
TruncatedEgf roselle_denominator(unsigned order) {
  return exp_series(v(Var::x), order) - v(Var::x) * exp_series(1, order);
}

// 1 - y x^{-1} e^{(x-y)t}
TruncatedEgf eulerian_denominator(unsigned order) {
  return TruncatedEgf::constant(1, order) -
         Polynomial::var(Var::y) * Polynomial::var(Var::x, -1) * exp_series(v(Var::x) - v(Var::y), order);
}

}  // namespace

bool ClosedFormIdentity::holds() const {
  return check_identity_crossmul(SeriesProduct{1, {generated, denominator}}, SeriesProduct{1, {numerator}});
}

TruncatedEgf ClosedFormIdentity::closed_form_coefficients() const { return solve_quotient(numerator, denominator); }

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {"fxz", "fsg-2", "gat", "gpstar", "gpn", "genab", "eulerian"};
  return ids;
}

ClosedFormIdentity closed_form_identity(std::string_view id, unsigned order, CoefficientSource source) {
  const Grammar gd = Grammar::dumont();
  const Polynomial a = v(Var::a), b = v(Var::b), x = v(Var::x), y = v(Var::y), z = v(Var::z);
  const Polynomial a_inv = Polynomial::var(Var::a, -1);
  const bool by_grammar = source == CoefficientSource::grammar;

  // D^n(a) / a under the Dumont grammar.
  auto dumont_quotient = [&](unsigned n) { return derive_n(gd, a, n) * a_inv; };

  if (id == "fxz") {
    if (!by_grammar) require_enumerable(order);
    auto gen = series_from(order, [&](unsigned n) {
      if (by_grammar) return substitute(dumont_quotient(n), {{Var::y, 1}});
      return enumerate(n, {{Stat::exc, Var::x}, {Stat::fix, Var::z}});
    });
    return {"fxz", "(1-x)e^{zt} / (e^{xt} - x e^t)",
            by_grammar ? "D^n(a)/a at y=1" : "sum over S_n of x^exc z^fix", std::move(gen),
            (1 - x) * exp_series(z, order), roselle_denominator(order)};
  }
  if (id == "fsg-2") {
    if (!by_grammar) require_enumerable(order);
    auto gen = series_from(order, [&](unsigned n) {
      if (by_grammar) return dumont_quotient(n);
      return enumerate(n, {{Stat::exc, Var::x}, {Stat::drop, Var::y}, {Stat::fix, Var::z}});
    });
    return {"fsg-2", "(y-x)e^{zt} / (y e^{xt} - x e^{yt})",
            by_grammar ? "D^n(a)/a" : "sum over S_n of x^exc y^drop z^fix", std::move(gen),
            (y - x) * exp_series(z, order), homogeneous_denominator(order)};
  }
  if (id == "gat") {
    if (!by_grammar) require_enumerable(order);
    auto gen = by_grammar ? gen_from_grammar(gd, a, order) : series_from(order, [&](unsigned n) {
      return a * enumerate(n, {{Stat::exc, Var::x}, {Stat::drop, Var::y}, {Stat::fix, Var::z}});
    });
    return {"gat", "a(y-x)e^{zt} / (y e^{xt} - x e^{yt})",
            by_grammar ? "D^n(a)" : "a * sum over S_n of x^exc y^drop z^fix", std::move(gen),
            a * (y - x) * exp_series(z, order), homogeneous_denominator(order)};
  }
  if (id == "gpstar") {
    if (!by_grammar) require_enumerable(order);
    auto gen = series_from(order, [&](unsigned n) {
      if (by_grammar) return substitute(dumont_quotient(n), {{Var::y, 1}});
      return enumerate(n, {{Stat::jump, Var::x}, {Stat::lsuc, Var::z}});
    });
    return {"gpstar", "(1-x)e^{zt} / (e^{xt} - x e^t)",
            by_grammar ? "D^n(a)/a at y=1" : "sum over S_n of x^jump z^lsuc", std::move(gen),
            (1 - x) * exp_series(z, order), roselle_denominator(order)};
  }
  if (id == "gpn") {
    if (!by_grammar) require_enumerable(order + 1);
    const Grammar gab = Grammar::dumont_b();
    const Bindings to_asc_suc = {{Var::a, 1}, {Var::y, 1}, {Var::b, x}, {Var::z, x * z}};
    auto gen = series_from(order, [&](unsigned n) {
      if (by_grammar) return substitute(derive_n(gab, a * b, n), to_asc_suc);
      return enumerate(n + 1, {{Stat::asc, Var::x}, {Stat::suc, Var::z}});
    });
    auto den = roselle_denominator(order);
    return {"gpn", "x(1-x)^2 e^{(xz+1)t} / (e^{xt} - x e^t)^2",
            by_grammar ? "D^n(ab) at a=1, y=1, b=x, z=xz" : "sum over S_{n+1} of x^asc z^suc", std::move(gen),
            x * (1 - x).pow(2) * exp_series(x * z + 1, order), den * den};
  }
  if (id == "genab") {
    if (!by_grammar) require_enumerable(order + 1);
    const Grammar gab = Grammar::dumont_b();
    auto gen = by_grammar ? gen_from_grammar(gab, a * b, order) : series_from(order, [&](unsigned n) {
      Polynomial sum;
      for_each_permutation(static_cast<int>(n + 1), [&](const Permutation& p) {
        Monomial m = Monomial::of(Var::a);
        m.set_exponent(Var::b, p.at(1) == 1 ? 1 : 0);
        m.set_exponent(Var::x, stat(p, Stat::jump));
        m.set_exponent(Var::y, stat(p, Stat::des));
        m.set_exponent(Var::z, stat(p, Stat::suc));
        sum.add_term(m, 1);
      });
      return sum;
    });
    auto eul = eulerian_denominator(order);
    // a(y-x)e^{zt} ((x-y) + (b-x)(1 - y x^{-1} e^{(x-y)t}))
    auto num = a * (y - x) * exp_series(z, order) * (TruncatedEgf::constant(x - y, order) + (b - x) * eul);
    return {"genab", "a(y-x)e^{zt} / (y e^{xt} - x e^{yt}) * ((x-y)/(1 - y x^{-1} e^{(x-y)t}) - x + b)",
            by_grammar ? "D^n(ab), b -> xy grammar" : "sum over S_{n+1} of a b^[s1=1] x^jump y^des z^suc",
            std::move(gen), std::move(num), homogeneous_denominator(order) * eul};
  }
  if (id == "eulerian") {
    if (!by_grammar) require_enumerable(order);
    auto gen = by_grammar ? gen_from_grammar(Grammar::eulerian(), x, order) : series_from(order, [&](unsigned n) {
      Polynomial sum;
      for_each_permutation(static_cast<int>(n), [&](const Permutation& p) {
        int e = stat(p, Stat::exc);
        Monomial m = Monomial::of(Var::x, e + 1);
        m.set_exponent(Var::y, static_cast<int>(n) - e);
        sum.add_term(m, 1);
      });
      return sum;
    });
    return {"eulerian", "(x-y) / (1 - y x^{-1} e^{(x-y)t})",
            by_grammar ? "D^n(x), {x -> xy, y -> xy}" : "sum over S_n of x^(exc+1) y^(n-exc)", std::move(gen),
            TruncatedEgf::constant(x - y, order), eulerian_denominator(order)};
  }
  throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

}  // namespace dumont
