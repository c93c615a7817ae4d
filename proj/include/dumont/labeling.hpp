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

// Grammatical labeling of the n+1 insertion slots of a permutation.
//
// Slot i (1 <= i <= n) sits between sigma_{i-1} and sigma_i, with
// sigma_0 = 0; slot n+1 follows sigma_n.  Labels are grammar variables.

#include <string>
#include <vector>

#include "dumont/perms.hpp"
#include "dumont/poly.hpp"

namespace dumont {

enum class LabelVariant {
  left_succession,      // labels count (jump, des, lsuc)
  interior_succession,  // as above, but slot 1 is b when sigma_1 = 1
};

struct SlotLabeling {
  std::vector<Var> labels;  // labels[i - 1] is slot i
  LabelVariant variant = LabelVariant::left_succession;

  int slots() const { return static_cast<int>(labels.size()); }
  Var at(int slot) const { return labels[static_cast<std::size_t>(slot - 1)]; }
  int count(Var v) const;
  /// The slot holding the unique a label.
  int a_slot() const;
};

/// Requires n >= 1.
SlotLabeling label_slots(const Permutation& p, LabelVariant variant = LabelVariant::left_succession);

/// Product of the slot labels.
Polynomial weight(const SlotLabeling& labeling);

/// Splices n+1 into the given slot (1..n+1).  Throws SlotOutOfRange.
Permutation insert_at(const Permutation& p, int slot);

/// Removes the maximum element n.
Permutation remove_max(const Permutation& p);

struct HistoryStep {
  int slot = 0;       // slot of the smaller permutation receiving the new maximum
  Var label = Var::a; // that slot's left-succession label
};

/// Insertion history rebuilding p from the permutation 1, in replay order:
/// step k (0-based) inserts k+2 into the permutation of [k+1].
std::vector<HistoryStep> extract_history(const Permutation& p);

/// Interleaved display `0 x 2 x 6 y 3 z 4 y 1 x 5 x 8 z 9 a 7 y`.
std::string labeled_text(const Permutation& p, const SlotLabeling& labeling);

}  // namespace dumont
