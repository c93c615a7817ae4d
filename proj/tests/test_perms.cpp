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

#include <cstdlib>
#include <map>

#include "dumont/error.hpp"
#include "dumont/grammar.hpp"
#include "dumont/perms.hpp"
#include "dumont/series.hpp"
#include "support.hpp"

using namespace dumont;

namespace {

Permutation to_perm(const oracle::Word& s) { return Permutation(std::vector<int>(s.begin() + 1, s.end())); }

Polynomial dist(int n, std::string_view spec) {
  auto sv = parse_stat_spec(spec);
  return distribution(n, sv);
}

Polynomial at_xz(const Polynomial& p) { return substitute(p, {{Var::z, Polynomial::parse("xz")}}); }

std::vector<std::set<int>> subsets(int m) {
  std::vector<std::set<int>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::set<int> s;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) s.insert(i + 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("permutation construction") {
  CHECK(Permutation::parse("2 6 3 4 1 5 8 9 7").size() == 9);
  CHECK(Permutation::parse("").size() == 0);
  CHECK(Permutation::identity(3) == Permutation::parse("1 2 3"));
  CHECK(Permutation::parse(" 3 1  2 ").to_string() == "3 1 2");
  CHECK(Permutation::parse("3 1 2").at(0) == 0);
  CHECK(Permutation::parse("3 1 2").position_of(1) == 2);
  CHECK_THROWS_AS(Permutation::parse("1 1"), MalformedPermutation);
  CHECK_THROWS_AS(Permutation::parse("0 1"), MalformedPermutation);
  CHECK_THROWS_AS(Permutation::parse("1 3"), MalformedPermutation);
  CHECK_THROWS_AS(Permutation::parse("1 x"), MalformedPermutation);
}

TEST_CASE("cycle notation") {
  Permutation p = Permutation::parse("8 2 5 9 3 1 7 4 6");
  CHECK(to_cycles(p).to_string() == "(1 8 4 9 6)(2)(3 5)(7)");
  CHECK(from_cycles(to_cycles(p)) == p);
  CHECK(CycleForm::parse("(5 3)(7)(4 9 6 1 8)(2)") == to_cycles(p));
  CHECK(CycleForm::parse("").size() == 0);
  CHECK_THROWS_AS(CycleForm::parse("(1 2)(2 3)"), MalformedCycles);
  CHECK_THROWS_AS(CycleForm::parse("(1 3)"), MalformedCycles);
  CHECK_THROWS_AS(CycleForm::parse("(1 2"), MalformedCycles);
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : oracle::all_perms(n)) {
      CHECK(to_cycles(to_perm(s)).to_string() == oracle::cycles(s));
      CHECK(inverse(to_perm(s)) == to_perm(oracle::inverse(s)));
    }
}

TEST_CASE("statistics on worked examples") {
  Permutation s = Permutation::parse("1 6 3 2 4 5");
  CHECK(stat(s, Stat::jump) == 2);
  CHECK(stat(s, Stat::des) == 2);
  CHECK(stat(s, Stat::lsuc) == 2);
  CHECK(set_stat(s, SetStat::Lbar) == std::set<int>{1, 5});
  CHECK(set_stat(s, SetStat::Jumpbar) == std::set<int>{4, 6});
  Permutation img = Permutation::parse("1 6 4 2 5 3");
  CHECK(set_stat(img, SetStat::F) == std::set<int>{1, 5});
  CHECK(set_stat(img, SetStat::Excbar) == std::set<int>{4, 6});
  CHECK(stat(img, Stat::exc) == 2);
  CHECK(stat(img, Stat::drop) == 2);

  Permutation t = Permutation::parse("3 4 1 2 5");
  CHECK(set_stat(t, SetStat::M) == std::set<int>{1, 3});
  CHECK(set_stat(t, SetStat::Mbar) == std::set<int>{1, 3});
  CHECK(set_stat(Permutation::parse("2 3 1"), SetStat::Mbar) == std::set<int>{2});
  CHECK(set_stat(Permutation::parse("1 2 3"), SetStat::G) == std::set<int>{1, 2});
  CHECK(set_stat(Permutation::parse("1 2 3"), SetStat::F) == std::set<int>{1, 2, 3});
  CHECK(stat(Permutation::parse("2 3 1 5 4"), Stat::basc) == 1);
  CHECK(stat(Permutation::parse("2 3 1 5 4"), Stat::jump) == 2);
}

TEST_CASE("statistics agree with the brute-force oracle") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& s : oracle::all_perms(n)) {
      Permutation p = to_perm(s);
      CHECK(stat(p, Stat::exc) == oracle::exc(s));
      CHECK(stat(p, Stat::drop) == oracle::drop(s));
      CHECK(stat(p, Stat::fix) == oracle::fix(s));
      CHECK(stat(p, Stat::asc) == oracle::asc(s));
      CHECK(stat(p, Stat::des) == oracle::des(s));
      CHECK(stat(p, Stat::suc) == oracle::suc(s));
      CHECK(stat(p, Stat::lsuc) == oracle::lsuc(s));
      CHECK(stat(p, Stat::jump) == oracle::jump(s));
    }
  }
}

TEST_CASE("statistic spec parsing") {
  auto spec = parse_stat_spec("jump:x,des:y,suc:z");
  REQUIRE(spec.size() == 3);
  CHECK(spec[1].stat == Stat::des);
  CHECK(spec[1].var == Var::y);
  CHECK(stat_name(Stat::lsuc) == "lsuc");
  CHECK(parse_stat("basc") == Stat::basc);
  CHECK_THROWS_AS(parse_stat_spec("foo:x"), UnknownStatistic);
  CHECK_THROWS_AS(parse_stat_spec("jump"), ParseError);
  CHECK_THROWS_AS(parse_stat_spec("jump:q"), ParseError);
}

TEST_CASE("distributions reproduce the printed tables") {
  auto ps = golden::table("Pstar.txt"), p = golden::table("P.txt"), r = golden::table("R.txt");
  for (int n = 0; n <= 4; ++n) {
    auto i = static_cast<std::size_t>(n);
    CHECK(dist(n, "jump:x,lsuc:z").to_string() == ps[i]);
    CHECK(dist(n, "asc:x,suc:z").to_string() == p[i]);
    CHECK(dist(n, "jump:x,des:y,suc:z").to_string() == r[i]);
  }
  CHECK(dist(0, "exc:x") == Polynomial(1));
}

TEST_CASE("distributions agree with the oracle") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(dist(n, "exc:x,drop:y,fix:z") == oracle::F(n));
    CHECK(dist(n, "jump:x,des:y,lsuc:z") == oracle::L(n));
    CHECK(dist(n, "jump:x,des:y,suc:z") == oracle::R(n));
    CHECK(dist(n, "asc:x,suc:z") == oracle::P(n));
  }
  CHECK_THROWS_AS(dist(10, "exc:x"), SizeTooLarge);
  CHECK_THROWS_AS(dist(-1, "exc:x"), SizeTooLarge);
}

TEST_CASE("(jump, des, lsuc) and (exc, drop, fix) are equidistributed") {
  for (int n = 0; n <= 8; ++n) CHECK(dist(n, "jump:x,des:y,lsuc:z") == dist(n, "exc:x,drop:y,fix:z"));
}

TEST_CASE("parallel enumeration is deterministic") {
  Polynomial serial = dist(8, "jump:x,des:y,suc:z");
  setenv("DUMONT_WORKERS", "3", 1);
  CHECK(enumeration_workers() == 3);
  CHECK(dist(8, "jump:x,des:y,suc:z") == serial);
  setenv("DUMONT_WORKERS", "bogus", 1);
  CHECK(enumeration_workers() == 1);
  unsetenv("DUMONT_WORKERS");
  CHECK(enumeration_workers() == 1);
}

TEST_CASE("derangements and relative derangements") {
  CHECK(derangement_counts(5).derangements == 44);
  CHECK(derangement_counts(5).relative == 53);
  CHECK(derangement_counts(0).derangements == 1);
  for (int n = 1; n <= 8; ++n) {
    CHECK(derangement_counts(n).derangements == oracle::derangements(n));
    CHECK(derangement_counts(n).relative == oracle::relative_derangements(n));
  }
  for (int n = 1; n <= 9; ++n)
    CHECK(derangement_counts(n).relative == derangement_counts(n).derangements + derangement_counts(n - 1).derangements);
  CHECK_THROWS_AS(derangement_counts(10), SizeTooLarge);
}

TEST_CASE("inverse maps successions and fixed points") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& p) {
      Permutation q = inverse(p);
      CHECK(set_stat(q, SetStat::Mbar) == set_stat(p, SetStat::M));
      CHECK(set_stat(q, SetStat::G) == set_stat(p, SetStat::G));
      CHECK(set_stat(q, SetStat::F) == set_stat(p, SetStat::F));
    });
}

TEST_CASE("succession and fixed-point classes have equal sizes") {
  for (int n = 1; n <= 6; ++n) {
    long total = 0;
    for (const auto& I : subsets(n - 1)) {
      auto m = filter_class(n, PermClass::M, I).size();
      CHECK(filter_class(n, PermClass::Mbar, I).size() == m);
      CHECK(filter_class(n, PermClass::G, I).size() == m);
      total += static_cast<long>(m);
    }
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(total == fact);
  }
  CHECK(filter_class(3, PermClass::M, {}).size() == 3);
  CHECK_THROWS_AS(filter_class(3, PermClass::M, {3}), InvalidClassSet);
  CHECK_NOTHROW(filter_class(3, PermClass::F, {3}));
  CHECK_THROWS_AS(filter_class(3, PermClass::Lbar, {4}), InvalidClassSet);
}

TEST_CASE("left successions and fixed points have equal class sizes") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& I : subsets(n))
      CHECK(filter_class(n, PermClass::Lbar, I).size() == filter_class(n, PermClass::F, I).size());
}

TEST_CASE("ascents split into jumps and left successions") {
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [n](const Permutation& p) {
      CHECK(stat(p, Stat::asc) + stat(p, Stat::des) == n);
      CHECK(stat(p, Stat::asc) == stat(p, Stat::jump) + stat(p, Stat::lsuc));
      CHECK(stat(p, Stat::asc) == stat(p, Stat::jump) + stat(p, Stat::suc) + (p.at(1) == 1 ? 1 : 0));
      CHECK(stat(p, Stat::jump) == stat(p, Stat::basc) + (p.at(1) >= 2 ? 1 : 0));
    });
}

TEST_CASE("1 + jump + suc = asc fails as a per-permutation identity") {
  // Checked literally over S_n: it fails exactly when sigma_1 != 1.
  for (int n = 1; n <= 8; ++n) {
    long failures = 0, expected = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      failures += 1 + stat(p, Stat::jump) + stat(p, Stat::suc) != stat(p, Stat::asc);
      expected += p.at(1) != 1;
    });
    CHECK(failures == expected);
  }
  Permutation s = Permutation::parse("2 1");
  CHECK(stat(s, Stat::asc) == 1);
  CHECK(stat(s, Stat::jump) == 1);
  CHECK(stat(s, Stat::suc) == 0);
  CHECK(1 + stat(s, Stat::jump) + stat(s, Stat::suc) != stat(s, Stat::asc));
  // It does hold whenever sigma_1 = 1.
  for (int n = 1; n <= 6; ++n)
    for_each_permutation_starting_with(n, 1, [](const Permutation& p) {
      CHECK(1 + stat(p, Stat::jump) + stat(p, Stat::suc) == stat(p, Stat::asc));
    });
}

TEST_CASE("ascent polynomials from the b-grammar") {
  Bindings at{{Var::a, 1}, {Var::y, 1}, {Var::b, Polynomial::var(Var::x)}, {Var::z, Polynomial::parse("xz")}};
  for (int n = 1; n <= 7; ++n) {
    Polynomial d = derive_n(Grammar::dumont_b(), Polynomial::parse("ab"), static_cast<unsigned>(n - 1));
    CHECK(substitute(d, at) == oracle::P(n));
  }
}

TEST_CASE("ascent polynomials from jump/left-succession polynomials") {
  for (int n = 1; n <= 7; ++n)
    CHECK(oracle::P(n) == at_xz(oracle::Pstar(n)) + Polynomial::parse("x - xz") * at_xz(oracle::Pstar(n - 1)));
}

TEST_CASE("successions from left successions and Eulerian polynomials") {
  for (int n = 0; n <= 6; ++n) {
    Polynomial sum = oracle::L(n);
    for (int k = 1; k <= n; ++k)
      sum += Polynomial(Rational(binomial(unsigned(n), unsigned(k)))) * oracle::A(k) * oracle::L(n - k);
    CHECK(oracle::R(n + 1) == sum);
  }
}
