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

#include "dumont/grammar.hpp"

#include <sstream>

#include "dumont/error.hpp"

namespace dumont {

namespace {

const Polynomial& xy() {
  static const Polynomial p = Polynomial::var(Var::x) * Polynomial::var(Var::y);
  return p;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Grammar& Grammar::set_rule(Var v, Polynomial image) {
  rules_[static_cast<std::size_t>(v)] = std::move(image);
  return *this;
}

Grammar Grammar::dumont() {
  Grammar g;
  g.set_rule(Var::a, Polynomial::var(Var::a) * Polynomial::var(Var::z));
  g.set_rule(Var::z, xy());
  g.set_rule(Var::x, xy());
  g.set_rule(Var::y, xy());
  return g;
}

Grammar Grammar::dumont_b() { return dumont().set_rule(Var::b, xy()); }

Grammar Grammar::eulerian() {
  Grammar g;
  g.set_rule(Var::x, xy());
  g.set_rule(Var::y, xy());
  return g;
}

Grammar Grammar::by_name(std::string_view name) {
  if (name == "dumont") return dumont();
  if (name == "dumont-b") return dumont_b();
  if (name == "eulerian") return eulerian();
  throw UnknownGrammar("unknown grammar '" + std::string(name) + "' (expected dumont, dumont-b or eulerian)");
}

Grammar Grammar::parse(std::string_view text) {
  Grammar g;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("grammar line " + std::to_string(line_no) + ": missing '->'");
    std::string_view lhs = trim(line.substr(0, arrow));
    if (lhs.size() != 1 || !var_from_char(lhs[0]))
      throw ParseError("grammar line " + std::to_string(line_no) + ": left side must be one of a, b, x, y, z");
    Var v = *var_from_char(lhs[0]);
    if (g.rule(v))
      throw ParseError("grammar line " + std::to_string(line_no) + ": duplicate rule for " + std::string(lhs));
    g.set_rule(v, Polynomial::parse(line.substr(arrow + 2)));
  }
  return g;
}

std::string Grammar::to_string() const {
  std::ostringstream os;
  for (Var v : kAllVars)
    if (const auto& r = rule(v)) os << var_name(v) << " -> " << r->to_string() << '\n';
  return os.str();
}

Polynomial derive(const Grammar& g, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (Var v : kAllVars) {
      int e = m.exponent(v);
      const auto& image = g.rule(v);
      if (e == 0 || !image) continue;
      Monomial lowered = m;
      lowered.set_exponent(v, e - 1);
      Rational scale = c * e;
      for (const auto& [rm, rc] : image->terms()) out.add_term(lowered * rm, scale * rc);
    }
  }
  return out;
}

Polynomial derive_n(const Grammar& g, Polynomial p, unsigned n) {
  for (unsigned i = 0; i < n && !p.is_zero(); ++i) p = derive(g, p);
  return p;
}

bool is_constant(const Grammar& g, const Polynomial& p) { return derive(g, p).is_zero(); }

Polynomial eulerian(unsigned n) { return derive_n(Grammar::eulerian(), Polynomial::var(Var::x), n); }

}  // namespace dumont
