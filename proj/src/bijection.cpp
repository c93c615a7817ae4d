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

#include "dumont/bijection.hpp"

#include <algorithm>
#include <map>

#include "dumont/error.hpp"

namespace dumont {

std::optional<int> CoherencePairing::slot_for_leaf(const LeafRef& leaf) const {
  auto it = std::find(slot_to_leaf.begin(), slot_to_leaf.end(), leaf);
  if (it == slot_to_leaf.end()) return std::nullopt;
  return static_cast<int>(it - slot_to_leaf.begin()) + 1;
}

CoherencePairing pair(const Permutation& sigma, const LabeledTree& tree) {
  const int n = sigma.size();
  if (tree.size() != n)
    throw Incoherent("permutation of [" + std::to_string(n) + "] against a tree on [" +
                     std::to_string(tree.size()) + "]");
  SlotLabeling labels = label_slots(sigma);
  if (weight(labels) != tree_weight(tree))
    throw Incoherent("weights differ: " + weight(labels).to_string() + " vs " + tree_weight(tree).to_string());

  const LeafRef a_leaf{tree.right_spine().back(), Side::right};
  CoherencePairing out;
  std::set<LeafRef> used;
  for (int i = 1; i <= n + 1; ++i) {
    Var label = labels.at(i);
    std::optional<LeafRef> leaf;
    int vertex = 0;
    switch (label) {
      case Var::x:
      case Var::z:
        vertex = sigma.at(i);
        leaf = tree.leaf_of(vertex, label);
        break;
      case Var::y:
        vertex = sigma.at(i - 1) + 1;
        leaf = tree.leaf_of(vertex, label);
        break;
      case Var::a:
        leaf = a_leaf;
        break;
      case Var::b:
        break;
    }
    if (!leaf)
      throw Incoherent("slot " + std::to_string(i) + " is labeled " + var_name(label) + " but vertex " +
                       std::to_string(vertex) + " has no such leaf");
    if (!used.insert(*leaf).second)
      throw Incoherent("two slots map to the " + leaf_to_string(*leaf));
    out.slot_to_leaf.push_back(*leaf);
  }
  return out;
}

std::vector<PhiStep> phi_trace(const Permutation& sigma) {
  std::vector<PhiStep> steps;
  Permutation cur = Permutation::identity(1);
  LabeledTree tree = LabeledTree::base();
  for (const HistoryStep& h : extract_history(sigma)) {
    CoherencePairing pairing = pair(cur, tree);
    const LeafRef& leaf = pairing.leaf_for_slot(h.slot);
    steps.push_back({cur, label_slots(cur), tree, h.slot, leaf});
    tree = grow(tree, leaf);
    cur = insert_at(cur, h.slot);
  }
  steps.push_back({cur, label_slots(cur), tree, 0, std::nullopt});
  return steps;
}

Permutation phi(const Permutation& sigma) { return from_cycles(decode(phi_trace(sigma).back().tree)); }

namespace {

// Deletes the maximum n from its cycle: n's preimage is sent to n's image.
Permutation drop_max_from_cycle(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) w.push_back(pi.at(i) == n ? pi.at(n) : pi.at(i));
  return Permutation(std::move(w));
}

}  // namespace

Permutation phi_inverse(const Permutation& pi) {
  if (pi.size() < 1) throw MalformedPermutation("phi_inverse needs n >= 1");

  // Peel the maximum off the tree side, remembering where it hung.
  std::vector<Permutation> reduced;
  std::vector<LeafRef> grown_at;
  Permutation cur = pi;
  while (cur.size() > 1) {
    const int k = cur.size();
    LabeledTree tree = encode(to_cycles(cur));
    int parent = tree.parent(k);
    grown_at.push_back({parent, tree.left(parent).vertex == k ? Side::left : Side::right});
    cur = drop_max_from_cycle(cur);
    reduced.push_back(cur);
  }

  // Replay on the permutation side, smallest stage first.
  Permutation sigma = Permutation::identity(1);
  for (std::size_t j = reduced.size(); j-- > 0;) {
    LabeledTree tree = encode(to_cycles(reduced[j]));
    auto slot = pair(sigma, tree).slot_for_leaf(grown_at[j]);
    if (!slot) throw Incoherent("no slot pairs with the " + leaf_to_string(grown_at[j]));
    sigma = insert_at(sigma, *slot);
  }
  return sigma;
}

BijectionReport verify_fixed_point_bijection(int n) {
  if (n < 1) throw MalformedPermutation("bijection check needs n >= 1");
  if (n > 8) throw SizeTooLarge("bijection check is limited to n <= 8");

  BijectionReport report;
  report.n = n;
  auto violate = [&](const std::string& msg) {
    if (report.violations.size() < 50) report.violations.push_back(msg);
  };

  std::set<Permutation> images;
  std::map<std::set<int>, long> lbar_class_size, fix_class_size;
  for_each_permutation(n, [&](const Permutation& sigma) {
    Permutation image = phi(sigma);
    const std::string tag = sigma.to_string() + " -> " + image.to_string() + ": ";
    if (!images.insert(image).second) violate(tag + "image already hit");

    std::set<int> lbar = set_stat(sigma, SetStat::Lbar);
    if (lbar != set_stat(image, SetStat::F)) violate(tag + "left-succession values differ from fixed points");
    if (set_stat(sigma, SetStat::Jumpbar) != set_stat(image, SetStat::Excbar))
      violate(tag + "jump values differ from excedance values");

    BijectionTableRow row{lbar, sigma, image, stat(sigma, Stat::jump), stat(sigma, Stat::des),
                          stat(image, Stat::exc), stat(image, Stat::drop)};
    if (row.jump != row.exc || row.des != row.drop) violate(tag + "(jump, des) differs from (exc, drop)");
    if (phi_inverse(image) != sigma) violate(tag + "phi_inverse does not recover the input");

    ++lbar_class_size[lbar];
    ++fix_class_size[set_stat(sigma, SetStat::F)];
    report.rows.push_back(std::move(row));
  });

  if (lbar_class_size != fix_class_size) violate("class sizes of equal left-succession sets and fixed-point sets differ");

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const auto& l, const auto& r) {
    if (l.subset.size() != r.subset.size()) return l.subset.size() < r.subset.size();
    return l.subset < r.subset;
  });
  return report;
}

}  // namespace dumont
