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

// A bijection from permutations with a given set of left-succession values
// to permutations with the same set of fixed points, carrying
// (jump, des) to (exc, drop).
//
// The map runs two synchronized growth processes.  The permutation is
// rebuilt by inserting its maxima one at a time; the companion tree grows
// at the leaf that the coherence pairing assigns to each insertion slot.
// The final tree, read in cycle notation, is the image.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dumont/labeling.hpp"
#include "dumont/perms.hpp"
#include "dumont/trees.hpp"

namespace dumont {

/// Matches each slot of a permutation with a leaf of a tree of the same
/// weight:
///   x-slot i -> x-leaf of vertex sigma_i
///   y-slot i -> y-leaf of vertex sigma_{i-1} + 1
///   z-slot i -> z-leaf of vertex sigma_i
///   a-slot   -> the a-leaf
struct CoherencePairing {
  std::vector<LeafRef> slot_to_leaf;  // [slot - 1]

  const LeafRef& leaf_for_slot(int slot) const { return slot_to_leaf.at(static_cast<std::size_t>(slot - 1)); }
  std::optional<int> slot_for_leaf(const LeafRef& leaf) const;
};

/// Throws Incoherent when the weights differ or a required leaf is missing.
CoherencePairing pair(const Permutation& sigma, const LabeledTree& tree);

Permutation phi(const Permutation& sigma);
Permutation phi_inverse(const Permutation& pi);

/// One stage of the forward construction.
struct PhiStep {
  Permutation perm;
  SlotLabeling labels;
  LabeledTree tree;
  int slot = 0;                  // insertion slot leading to the next stage; 0 on the last
  std::optional<LeafRef> leaf;   // the leaf grown for that insertion
};

/// Every stage of phi(sigma), starting from the permutation 1 and the base tree.
std::vector<PhiStep> phi_trace(const Permutation& sigma);

struct BijectionTableRow {
  std::set<int> subset;
  Permutation sigma;
  Permutation image;
  int jump = 0, des = 0;
  int exc = 0, drop = 0;
};

struct BijectionReport {
  int n = 0;
  std::vector<BijectionTableRow> rows;   // by (|I|, I), then sigma
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

/// Exhaustive check over S_n: phi is a bijection from each class of equal
/// left-succession values onto the class with those fixed points, carries
/// (jump, des) to (exc, drop) and jump values to excedance values, and
/// phi_inverse undoes it.  Throws SizeTooLarge for n > 8.
BijectionReport verify_fixed_point_bijection(int n);

}  // namespace dumont
