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

#include <compare>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dumont/poly.hpp"

namespace dumont {

/// Largest n for which S_n may be enumerated exhaustively.
inline constexpr int kMaxEnumerationSize = 9;

/// A permutation of [n] in one-line notation.  Statistics read the
/// virtual boundary value sigma_0 = 0 through at(0).
class Permutation {
 public:
  /// The empty permutation of [0].
  Permutation() = default;
  /// Throws MalformedPermutation unless word is a bijection on [n].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// Space-separated integers, e.g. "2 6 3 4 1 5 8 9 7".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// sigma_i for 1 <= i <= n; at(0) is 0.
  int at(int i) const { return i == 0 ? 0 : word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }

  /// Position (1-based) of value v.
  int position_of(int v) const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  friend void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
  friend void for_each_permutation_starting_with(int n, int first,
                                                 const std::function<void(const Permutation&)>& fn);
  std::vector<int> word_;
};

/// Cycle notation: each cycle led by its minimum, cycles by increasing minima.
struct CycleForm {
  std::vector<std::vector<int>> cycles;

  int size() const;
  /// Throws MalformedCycles when the invariants do not hold.
  void validate() const;
  /// `(1 8 4 9 6)(2)(3 5)(7)`
  std::string to_string() const;
  /// Accepts any cycle rotation and order; the result is canonical.
  static CycleForm parse(std::string_view text);

  bool operator==(const CycleForm&) const = default;
};

enum class Stat { exc, drop, fix, asc, des, suc, lsuc, jump, basc };
enum class SetStat { M, Mbar, G, F, Lbar, Jumpbar, Excbar };

std::string_view stat_name(Stat s);
/// Throws UnknownStatistic.
Stat parse_stat(std::string_view name);

int stat(const Permutation& p, Stat which);
std::set<int> set_stat(const Permutation& p, SetStat which);

struct StatVar {
  Stat stat;
  Var var;
};

/// Parses `jump:x,des:y,suc:z`.
std::vector<StatVar> parse_stat_spec(std::string_view text);

/// Visits S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
/// Visits the permutations of [n] with sigma_1 = first, lexicographically.
void for_each_permutation_starting_with(int n, int first, const std::function<void(const Permutation&)>& fn);

/// Worker count for enumeration, from DUMONT_WORKERS (default 1).
int enumeration_workers();

/// sum over S_n of prod var^stat.  distribution(0, ...) = 1.
Polynomial distribution(int n, std::span<const StatVar> spec);

enum class PermClass { M, Mbar, G, F, Lbar };

/// All sigma in S_n whose set statistic equals I, in lexicographic order.
std::vector<Permutation> filter_class(int n, PermClass which, const std::set<int>& subset);

struct DerangementCounts {
  long derangements = 0;  // fix = 0
  long relative = 0;      // suc = 0
};

DerangementCounts derangement_counts(int n);

Permutation inverse(const Permutation& p);
CycleForm to_cycles(const Permutation& p);
Permutation from_cycles(const CycleForm& c);

std::string set_to_string(const std::set<int>& s);

}  // namespace dumont
