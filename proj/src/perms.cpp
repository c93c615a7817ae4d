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

#include "dumont/perms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "dumont/error.hpp"

namespace dumont {

// ---------------------------------------------------------------------------
// Permutation and CycleForm

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw MalformedPermutation("not a permutation of [" + std::to_string(size()) + "]: " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::logic_error&) {
      throw MalformedPermutation("not an integer: '" + tok + "'");
    }
  }
  return Permutation(std::move(w));
}

int Permutation::position_of(int v) const {
  auto it = std::find(word_.begin(), word_.end(), v);
  if (it == word_.end()) throw MalformedPermutation("value " + std::to_string(v) + " not present");
  return static_cast<int>(it - word_.begin()) + 1;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

int CycleForm::size() const {
  int n = 0;
  for (const auto& c : cycles) n += static_cast<int>(c.size());
  return n;
}

void CycleForm::validate() const {
  int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int prev_min = 0;
  for (const auto& c : cycles) {
    if (c.empty()) throw MalformedCycles("empty cycle");
    if (*std::min_element(c.begin(), c.end()) != c.front())
      throw MalformedCycles("cycle does not start with its minimum: " + to_string());
    if (c.front() <= prev_min) throw MalformedCycles("cycles not sorted by minimum: " + to_string());
    prev_min = c.front();
    for (int v : c) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw MalformedCycles("cycles do not partition [" + std::to_string(n) + "]: " + to_string());
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}

std::string CycleForm::to_string() const {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

CycleForm CycleForm::parse(std::string_view text) {
  CycleForm form;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw MalformedCycles("expected '(' in \"" + std::string(text) + "\"");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw MalformedCycles("unbalanced '(' in \"" + std::string(text) + "\"");
    std::vector<int> cycle;
    try {
      std::istringstream is{std::string(text.substr(i + 1, close - i - 1))};
      std::string tok;
      while (is >> tok) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        cycle.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw MalformedCycles("non-integer entry in \"" + std::string(text) + "\"");
    }
    if (cycle.empty()) throw MalformedCycles("empty cycle in \"" + std::string(text) + "\"");
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    form.cycles.push_back(std::move(cycle));
    i = close + 1;
    skip_ws();
  }
  std::sort(form.cycles.begin(), form.cycles.end(),
            [](const auto& l, const auto& r) { return l.front() < r.front(); });
  form.validate();
  return form;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p.at(i) - 1)] = i;
  return Permutation(std::move(inv));
}

CycleForm to_cycles(const Permutation& p) {
  CycleForm form;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = p.at(v)) {
      seen[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

Permutation from_cycles(const CycleForm& c) {
  c.validate();
  std::vector<int> w(static_cast<std::size_t>(c.size()));
  for (const auto& cycle : c.cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i)
      w[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
  return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------
// Statistics

namespace {

constexpr std::array<std::pair<Stat, std::string_view>, 9> kStatNames = {{
    {Stat::exc, "exc"},
    {Stat::drop, "drop"},
    {Stat::fix, "fix"},
    {Stat::asc, "asc"},
    {Stat::des, "des"},
    {Stat::suc, "suc"},
    {Stat::lsuc, "lsuc"},
    {Stat::jump, "jump"},
    {Stat::basc, "basc"},
}};

}  // namespace

std::string_view stat_name(Stat s) {
  for (const auto& [k, name] : kStatNames)
    if (k == s) return name;
  return "?";
}

Stat parse_stat(std::string_view name) {
  for (const auto& [k, n] : kStatNames)
    if (n == name) return k;
  throw UnknownStatistic("unknown statistic '" + std::string(name) + "'");
}

std::vector<StatVar> parse_stat_spec(std::string_view text) {
  std::vector<StatVar> spec;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto colon = item.find(':');
    if (colon == std::string_view::npos || colon + 2 != item.size() || !var_from_char(item.back()))
      throw ParseError("statistic spec items look like 'jump:x', got '" + std::string(item) + "'");
    spec.push_back({parse_stat(item.substr(0, colon)), *var_from_char(item.back())});
  }
  return spec;
}

int stat(const Permutation& p, Stat which) {
  const int n = p.size();
  int count = 0;
  switch (which) {
    case Stat::exc:
      for (int i = 1; i <= n; ++i) count += p.at(i) > i;
      break;
    case Stat::drop:
      for (int i = 1; i <= n; ++i) count += p.at(i) < i;
      break;
    case Stat::fix:
      for (int i = 1; i <= n; ++i) count += p.at(i) == i;
      break;
    case Stat::asc:
      for (int i = 0; i <= n - 1; ++i) count += p.at(i) < p.at(i + 1);
      break;
    case Stat::des:
      for (int i = 1; i <= n - 1; ++i) count += p.at(i) > p.at(i + 1);
      break;
    case Stat::suc:
      for (int i = 1; i <= n - 1; ++i) count += p.at(i) + 1 == p.at(i + 1);
      break;
    case Stat::lsuc:
      for (int i = 1; i <= n; ++i) count += p.at(i - 1) + 1 == p.at(i);
      break;
    case Stat::jump:
      for (int i = 1; i <= n; ++i) count += p.at(i) >= p.at(i - 1) + 2;
      break;
    case Stat::basc:
      // A jump at index 1 does not count as a big ascent.
      for (int i = 2; i <= n; ++i) count += p.at(i) >= p.at(i - 1) + 2;
      break;
  }
  return count;
}

std::set<int> set_stat(const Permutation& p, SetStat which) {
  const int n = p.size();
  std::set<int> out;
  switch (which) {
    case SetStat::M:
      for (int i = 1; i <= n - 1; ++i)
        if (p.at(i) + 1 == p.at(i + 1)) out.insert(i);
      break;
    case SetStat::Mbar:
      for (int i = 1; i <= n - 1; ++i)
        if (p.at(i) + 1 == p.at(i + 1)) out.insert(p.at(i));
      break;
    case SetStat::G:
      // Index n is excluded even when it is fixed.
      for (int i = 1; i <= n - 1; ++i)
        if (p.at(i) == i) out.insert(i);
      break;
    case SetStat::F:
      for (int i = 1; i <= n; ++i)
        if (p.at(i) == i) out.insert(i);
      break;
    case SetStat::Lbar:
      for (int i = 1; i <= n; ++i)
        if (p.at(i - 1) + 1 == p.at(i)) out.insert(p.at(i));
      break;
    case SetStat::Jumpbar:
      for (int i = 1; i <= n; ++i)
        if (p.at(i - 1) + 2 <= p.at(i)) out.insert(p.at(i));
      break;
    case SetStat::Excbar:
      for (int i = 1; i <= n; ++i)
        if (p.at(i) > i) out.insert(p.at(i));
      break;
  }
  return out;
}

std::string set_to_string(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Enumeration

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  Permutation p = Permutation::identity(n);
  do {
    fn(p);
  } while (std::next_permutation(p.word_.begin(), p.word_.end()));
}

void for_each_permutation_starting_with(int n, int first, const std::function<void(const Permutation&)>& fn) {
  if (first < 1 || first > n) return;
  Permutation p = Permutation::identity(n);
  std::rotate(p.word_.begin(), p.word_.begin() + (first - 1), p.word_.begin() + first);
  do {
    fn(p);
  } while (std::next_permutation(p.word_.begin() + 1, p.word_.end()));
}

int enumeration_workers() {
  const char* env = std::getenv("DUMONT_WORKERS");
  if (!env) return 1;
  int w = std::atoi(env);
  return std::clamp(w, 1, 64);
}

namespace {

void check_enumeration_size(int n) {
  if (n < 0 || n > kMaxEnumerationSize)
    throw SizeTooLarge("exhaustive enumeration is limited to 0 <= n <= " + std::to_string(kMaxEnumerationSize) +
                       ", got n = " + std::to_string(n));
}

using ExponentCounts = std::map<std::array<int, 5>, long>;

void accumulate(ExponentCounts& counts, const Permutation& p, std::span<const StatVar> spec) {
  std::array<int, 5> exps{};
  for (const auto& sv : spec) exps[static_cast<std::size_t>(sv.var)] += stat(p, sv.stat);
  ++counts[exps];
}

}  // namespace

Polynomial distribution(int n, std::span<const StatVar> spec) {
  check_enumeration_size(n);
  if (n == 0) return 1;

  const int workers = std::min(enumeration_workers(), n);
  std::vector<ExponentCounts> partial(static_cast<std::size_t>(workers));
  auto run = [&](int w) {
    for (int first = w + 1; first <= n; first += workers)
      for_each_permutation_starting_with(n, first, [&](const Permutation& p) {
        accumulate(partial[static_cast<std::size_t>(w)], p, spec);
      });
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  Polynomial result;
  for (const auto& counts : partial) {
    for (const auto& [exps, count] : counts) {
      Monomial m;
      for (Var v : kAllVars) m.set_exponent(v, exps[static_cast<std::size_t>(v)]);
      result.add_term(m, count);
    }
  }
  return result;
}

std::vector<Permutation> filter_class(int n, PermClass which, const std::set<int>& subset) {
  check_enumeration_size(n);
  SetStat s{};
  int bound = n;
  switch (which) {
    case PermClass::M: s = SetStat::M; bound = n - 1; break;
    case PermClass::Mbar: s = SetStat::Mbar; bound = n - 1; break;
    case PermClass::G: s = SetStat::G; bound = n - 1; break;
    case PermClass::F: s = SetStat::F; break;
    case PermClass::Lbar: s = SetStat::Lbar; break;
  }
  for (int v : subset)
    if (v < 1 || v > bound)
      throw InvalidClassSet(set_to_string(subset) + " is not a subset of [" + std::to_string(bound) + "]");

  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (set_stat(p, s) == subset) out.push_back(p);
  });
  return out;
}

DerangementCounts derangement_counts(int n) {
  check_enumeration_size(n);
  DerangementCounts c;
  for_each_permutation(n, [&](const Permutation& p) {
    c.derangements += stat(p, Stat::fix) == 0;
    c.relative += stat(p, Stat::suc) == 0;
  });
  return c;
}

}  // namespace dumont
