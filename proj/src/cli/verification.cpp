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


#include "dumont/verification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "dumont/error.hpp"
#include "dumont/grammar.hpp"
#include "dumont/identities.hpp"
#include "dumont/labeling.hpp"
#include "dumont/perms.hpp"
#include "dumont/series.hpp"
#include "dumont/trees.hpp"

namespace dumont {

namespace {

// A check body returns an empty string on success, else the first mismatch.
using Body = std::function<std::string()>;

std::string range(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

Check run_check(std::string name, std::string anchor, std::string n_range, const Body& body) {
  Check c{std::move(name), std::move(anchor), std::move(n_range), CheckStatus::pass, ""};
  try {
    std::string failure = body();
    if (!failure.empty()) {
      c.status = CheckStatus::fail;
      c.detail = std::move(failure);
    } else {
      c.detail = "exact equality for n = " + c.n_range;
    }
  } catch (const std::exception& e) {
    c.status = CheckStatus::fail;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

Polynomial dist(int n, std::string_view spec) {
  auto vars = parse_stat_spec(spec);
  return distribution(n, vars);
}

std::string mismatch(int n, const Polynomial& lhs, const Polynomial& rhs) {
  return "n = " + std::to_string(n) + ": " + lhs.to_string() + " != " + rhs.to_string();
}

// Compares lhs(n) and rhs(n) for n in [lo, hi].
Body compare_each(int lo, int hi, std::function<Polynomial(int)> lhs, std::function<Polynomial(int)> rhs) {
  return [=] {
    for (int n = lo; n <= hi; ++n) {
      Polynomial l = lhs(n), r = rhs(n);
      if (l != r) return mismatch(n, l, r);
    }
    return std::string();
  };
}

Polynomial at_xz(const Polynomial& p) {
  // (x, z) -> (x, xz)
  return substitute(p, {{Var::z, Polynomial::var(Var::x) * Polynomial::var(Var::z)}});
}

void grammar_checks(int max_n, std::vector<Check>& out) {
  const Grammar gd = Grammar::dumont();
  const Polynomial a = Polynomial::var(Var::a);
  auto da = [gd, a](int n) { return derive_n(gd, a, static_cast<unsigned>(n)); };

  out.push_back(run_check("grammar/dumont-exc-drop-fix", "D^n(a) = a F_n(x,y,z), F_n = sum x^exc y^drop z^fix",
                          range(0, max_n),
                          compare_each(0, max_n, da, [a](int n) { return a * dist(n, "exc:x,drop:y,fix:z"); })));

  out.push_back(run_check("grammar/dumont-jump-des-lsuc", "D^n(a) = a L_n(x,y,z), L_n = sum x^jump y^des z^lsuc",
                          range(0, max_n),
                          compare_each(0, max_n, da, [a](int n) { return a * dist(n, "jump:x,des:y,lsuc:z"); })));

  const Grammar gb = Grammar::dumont_b();
  out.push_back(run_check(
      "grammar/b-grammar-successions", "D^(n-1)(ab) at a=b=1 equals R_n = sum x^jump y^des z^suc", range(1, max_n),
      compare_each(
          1, max_n,
          [gb](int n) {
            Polynomial w = Polynomial::parse("ab");
            return substitute(derive_n(gb, w, static_cast<unsigned>(n - 1)), {{Var::a, 1}, {Var::b, 1}});
          },
          [](int n) { return dist(n, "jump:x,des:y,suc:z"); })));

  out.push_back(run_check("grammar/eulerian", "D^n(x) = A_n(x,y) = sum x^(exc+1) y^(n-exc) under x -> xy, y -> xy",
                          range(0, max_n),
                          compare_each(
                              0, max_n, [](int n) { return eulerian(static_cast<unsigned>(n)); },
                              [](int n) {
                                return Polynomial::var(Var::x) * dist(n, "exc:x,drop:y,fix:y");
                              })));

  out.push_back(run_check("grammar/slot-labeling-weight", "sum over S_n of slot-label weights = D^n(a)",
                          range(1, max_n),
                          compare_each(1, max_n, da, [](int n) {
                            Polynomial sum;
                            for_each_permutation(n, [&](const Permutation& p) { sum += weight(label_slots(p)); });
                            return sum;
                          })));

  out.push_back(run_check("grammar/tree-weight", "sum over encoded trees of leaf weights = D^n(a)", range(1, max_n),
                          compare_each(1, max_n, da, [](int n) {
                            Polynomial sum;
                            for_each_permutation(n, [&](const Permutation& p) {
                              sum += tree_weight(encode(to_cycles(p)));
                            });
                            return sum;
                          })));

  out.push_back(run_check("grammar/constant-factoring", "D(z - y) = 0 and D^n(a/x) = (a/x)(z - y)^n",
                          range(0, max_n), [gd, max_n]() -> std::string {
                            Polynomial c = Polynomial::parse("z - y");
                            if (!is_constant(gd, c)) return "D(z - y) = " + derive(gd, c).to_string();
                            Polynomial w = Polynomial::parse("ax^-1");
                            for (int n = 0; n <= max_n; ++n) {
                              Polynomial l = derive_n(gd, w, static_cast<unsigned>(n));
                              Polynomial r = w * c.pow(n);
                              if (l != r) return mismatch(n, l, r);
                            }
                            return {};
                          }));
}

void series_checks(int max_n, std::vector<Check>& out) {
  const unsigned order = static_cast<unsigned>(std::min(max_n, 8));
  for (const auto& id : identity_ids()) {
    for (auto source : {CoefficientSource::grammar, CoefficientSource::enumeration}) {
      const bool by_grammar = source == CoefficientSource::grammar;
      std::string anchor;
      Check c = run_check("series/" + id + (by_grammar ? "-grammar" : "-enumeration"), "", range(0, int(order)),
                          [&]() -> std::string {
                            ClosedFormIdentity ident = closed_form_identity(id, order, source);
                            anchor = ident.formula + " (generated side: " + ident.generated_by + ")";
                            if (ident.holds()) return {};
                            TruncatedEgf lhs = ident.generated * ident.denominator;
                            for (unsigned n = 0; n <= order; ++n) {
                              if (lhs[n] != ident.numerator[n])
                                return "cross-multiplied coefficient " + std::to_string(n) + " differs";
                            }
                            return "cross-multiplied identity fails";
                          });
      c.anchor = anchor;
      out.push_back(std::move(c));
    }
  }
  if (order < static_cast<unsigned>(max_n)) {
    for (auto& c : out)
      if (c.name.starts_with("series/") && c.status == CheckStatus::pass) c.detail += " (series capped at order 8)";
  }
}

void identity_checks(int max_n, std::vector<Check>& out) {
  out.push_back(run_check(
      "identities/pnstar", "P_n(x,z) = P*_n(x,xz) + x(1-z) P*_(n-1)(x,xz), P_n = sum x^asc z^suc, P*_n = sum x^jump z^lsuc",
      range(1, max_n),
      compare_each(
          1, max_n, [](int n) { return dist(n, "asc:x,suc:z"); },
          [](int n) {
            Polynomial tail = Polynomial::parse("x - xz") * at_xz(dist(n - 1, "jump:x,lsuc:z"));
            return at_xz(dist(n, "jump:x,lsuc:z")) + tail;
          })));

  const Grammar gb = Grammar::dumont_b();
  out.push_back(run_check("identities/ascents-from-b-grammar", "P_n(x,z) = D^(n-1)(ab) at a=1, y=1, b=x, z=xz",
                          range(1, max_n),
                          compare_each(
                              1, max_n, [](int n) { return dist(n, "asc:x,suc:z"); },
                              [gb](int n) {
                                Polynomial d = derive_n(gb, Polynomial::parse("ab"), static_cast<unsigned>(n - 1));
                                return substitute(d, {{Var::a, 1},
                                                      {Var::y, 1},
                                                      {Var::b, Polynomial::var(Var::x)},
                                                      {Var::z, Polynomial::parse("xz")}});
                              })));

  out.push_back(run_check("identities/ascent-split", "asc(sigma) = jump(sigma) + lsuc(sigma) for every sigma",
                          range(1, max_n), [max_n]() -> std::string {
                            std::string bad;
                            for (int n = 1; n <= max_n && bad.empty(); ++n) {
                              for_each_permutation(n, [&](const Permutation& p) {
                                if (bad.empty() && stat(p, Stat::asc) != stat(p, Stat::jump) + stat(p, Stat::lsuc))
                                  bad = "sigma = " + p.to_string();
                              });
                            }
                            return bad;
                          }));

  out.push_back(run_check(
      "identities/successions-vs-left-successions",
      "R_(n+1) = L_n + sum_(k=1..n) C(n,k) A_k L_(n-k)", range(0, max_n - 1),
      compare_each(
          0, max_n - 1, [](int n) { return dist(n + 1, "jump:x,des:y,suc:z"); },
          [](int n) {
            auto L = [](int m) { return dist(m, "jump:x,des:y,lsuc:z"); };
            Polynomial sum = L(n);
            for (int k = 1; k <= n; ++k)
              sum += Polynomial(Rational(binomial(unsigned(n), unsigned(k)))) * eulerian(unsigned(k)) * L(n - k);
            return sum;
          })));

  out.push_back(run_check("identities/relative-derangements", "Q_n = D_n + D_(n-1)", range(1, max_n),
                          [max_n]() -> std::string {
                            for (int n = 1; n <= max_n; ++n) {
                              auto cur = derangement_counts(n), prev = derangement_counts(n - 1);
                              if (cur.relative != cur.derangements + prev.derangements)
                                return "n = " + std::to_string(n) + ": Q_n = " + std::to_string(cur.relative) +
                                       ", D_n + D_(n-1) = " + std::to_string(cur.derangements + prev.derangements);
                            }
                            return {};
                          }));

  out.push_back(run_check("identities/inverse-set-statistics",
                          "Mbar(sigma^-1) = M(sigma), G(sigma^-1) = G(sigma), F(sigma^-1) = F(sigma)",
                          range(1, max_n), [max_n]() -> std::string {
                            std::string bad;
                            for (int n = 1; n <= max_n && bad.empty(); ++n) {
                              for_each_permutation(n, [&](const Permutation& p) {
                                if (!bad.empty()) return;
                                Permutation q = inverse(p);
                                if (set_stat(q, SetStat::Mbar) != set_stat(p, SetStat::M) ||
                                    set_stat(q, SetStat::G) != set_stat(p, SetStat::G) ||
                                    set_stat(q, SetStat::F) != set_stat(p, SetStat::F))
                                  bad = "sigma = " + p.to_string();
                              });
                            }
                            return bad;
                          }));

  out.push_back(run_check("identities/succession-class-sizes", "|M_n(I)| = |Mbar_n(I)| = |G_n(I)| for all I in [n-1]",
                          range(1, max_n), [max_n]() -> std::string {
                            for (int n = 1; n <= max_n; ++n) {
                              std::map<std::set<int>, long> m, mbar, g;
                              for_each_permutation(n, [&](const Permutation& p) {
                                ++m[set_stat(p, SetStat::M)];
                                ++mbar[set_stat(p, SetStat::Mbar)];
                                ++g[set_stat(p, SetStat::G)];
                              });
                              if (m != mbar || m != g) return "class sizes differ at n = " + std::to_string(n);
                              if (m.size() != (std::size_t{1} << (n - 1)))
                                return "not every subset of [n-1] occurs at n = " + std::to_string(n);
                            }
                            return {};
                          }));
}

void bijection_checks(int max_n, std::vector<Check>& out) {
  const int top = std::min(max_n, 8);
  Check c = run_check("bijection/fixed-point-bijection",
                      "phi: S_n -> S_n bijective, Lbar = F o phi, Jumpbar = Excbar o phi, (jump,des) = (exc,drop) o phi",
                      range(1, top), [top]() -> std::string {
                        for (int n = 1; n <= top; ++n) {
                          BijectionReport r = verify_fixed_point_bijection(n);
                          if (!r.passed()) return "n = " + std::to_string(n) + ": " + r.violations.front();
                        }
                        return {};
                      });
  if (top < max_n && c.status == CheckStatus::pass) c.detail += " (capped at 8)";
  out.push_back(std::move(c));

  out.push_back(run_check("bijection/worked-example", "phi(1 6 3 2 4 5) = (1)(2 6 3 4)(5)", "6..6",
                          []() -> std::string {
                            Permutation image = phi(Permutation::parse("1 6 3 2 4 5"));
                            CycleForm want = CycleForm::parse("(1)(2 6 3 4)(5)");
                            if (to_cycles(image) != want) return "got " + to_cycles(image).to_string();
                            return {};
                          }));
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "grammar") return Suite::grammar;
  if (name == "series") return Suite::series;
  if (name == "bijection") return Suite::bijection;
  if (name == "identities") return Suite::identities;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const Check& c) { return c.status == CheckStatus::pass; }));
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

VerificationReport run_verification(Suite suite, int max_n) {
  if (max_n < 1 || max_n > kMaxEnumerationSize)
    throw SizeTooLarge("max-n must lie in 1.." + std::to_string(kMaxEnumerationSize));
  VerificationReport report;
  report.max_n = max_n;
  auto wants = [suite](Suite s) { return suite == Suite::all || suite == s; };
  if (wants(Suite::grammar)) grammar_checks(max_n, report.checks);
  if (wants(Suite::series)) series_checks(max_n, report.checks);
  if (wants(Suite::identities)) identity_checks(max_n, report.checks);
  if (wants(Suite::bijection)) {
    bijection_checks(max_n, report.checks);
    if (max_n <= 4) report.table = verify_fixed_point_bijection(max_n);
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const Check& l, const Check& r) { return l.name < r.name; });
  return report;
}

}  // namespace dumont
