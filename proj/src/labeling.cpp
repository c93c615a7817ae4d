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

#include "dumont/labeling.hpp"

#include <algorithm>

#include "dumont/error.hpp"

namespace dumont {

int SlotLabeling::count(Var v) const { return static_cast<int>(std::count(labels.begin(), labels.end(), v)); }

int SlotLabeling::a_slot() const {
  auto it = std::find(labels.begin(), labels.end(), Var::a);
  return static_cast<int>(it - labels.begin()) + 1;
}

SlotLabeling label_slots(const Permutation& p, LabelVariant variant) {
  const int n = p.size();
  if (n < 1) throw MalformedPermutation("slot labeling needs n >= 1");
  SlotLabeling out;
  out.variant = variant;
  out.labels.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    int prev = p.at(i - 1);
    int cur = p.at(i);
    Var label;
    if (prev == n) {
      label = Var::a;
    } else if (cur >= prev + 2) {
      label = Var::x;
    } else if (cur == prev + 1) {
      label = (variant == LabelVariant::interior_succession && i == 1) ? Var::b : Var::z;
    } else {
      label = Var::y;  // prev > cur and prev != n
    }
    out.labels.push_back(label);
  }
  out.labels.push_back(p.at(n) == n ? Var::a : Var::y);
  return out;
}

Polynomial weight(const SlotLabeling& labeling) {
  Monomial m;
  for (Var v : labeling.labels) m.set_exponent(v, m.exponent(v) + 1);
  return Polynomial(m);
}

Permutation insert_at(const Permutation& p, int slot) {
  const int n = p.size();
  if (slot < 1 || slot > n + 1)
    throw SlotOutOfRange("slot " + std::to_string(slot) + " outside 1.." + std::to_string(n + 1));
  std::vector<int> w(p.word().begin(), p.word().end());
  w.insert(w.begin() + (slot - 1), n + 1);
  return Permutation(std::move(w));
}

Permutation remove_max(const Permutation& p) {
  std::vector<int> w(p.word().begin(), p.word().end());
  std::erase(w, p.size());
  return Permutation(std::move(w));
}

std::vector<HistoryStep> extract_history(const Permutation& p) {
  if (p.size() < 1) throw MalformedPermutation("insertion history needs n >= 1");
  std::vector<HistoryStep> steps;
  Permutation cur = p;
  while (cur.size() > 1) {
    int slot = cur.position_of(cur.size());
    Permutation smaller = remove_max(cur);
    steps.push_back({slot, label_slots(smaller).at(slot)});
    cur = std::move(smaller);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::string labeled_text(const Permutation& p, const SlotLabeling& labeling) {
  std::string out = "0";
  for (int i = 1; i <= labeling.slots(); ++i) {
    out += ' ';
    out += var_name(labeling.at(i));
    if (i <= p.size()) out += " " + std::to_string(p.at(i));
  }
  return out;
}

}  // namespace dumont
