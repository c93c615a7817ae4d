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

// Complete increasing binary trees on [n] carrying the (a, x, y, z) leaf
// labeling, and their correspondence with permutations in cycle notation.
//
// Cycle minima form the right spine from the root 1.  A spine vertex whose
// left child is a z-leaf is a fixed point; otherwise its left subtree, read
// in order, is the rest of its cycle.  Inside those subtrees a missing left
// child is an x-leaf and a missing right child a y-leaf.  The spine ends in
// the a-leaf.

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dumont/perms.hpp"
#include "dumont/poly.hpp"
#include "json.hpp"

namespace dumont {

enum class Side { left, right };

/// A leaf, addressed by its parent vertex and side.
struct LeafRef {
  int parent = 0;
  Side side = Side::left;

  auto operator<=>(const LeafRef&) const = default;
  bool operator==(const LeafRef&) const = default;
};

struct Child {
  int vertex = 0;       // 0 for a leaf
  Var label = Var::a;   // leaf label; unused for vertices

  static Child leaf(Var label) { return {0, label}; }
  static Child node(int v) { return {v, Var::a}; }
  bool is_leaf() const { return vertex == 0; }

  bool operator==(const Child&) const = default;
};

class LabeledTree {
 public:
  /// Vertex 1 with a left z-leaf and a right a-leaf.
  static LabeledTree base();

  /// children[v - 1] holds the (left, right) children of vertex v.
  /// Throws MalformedTree unless every invariant holds.
  static LabeledTree from_children(std::vector<std::pair<Child, Child>> children);

  int size() const { return static_cast<int>(left_.size()); }
  const Child& child(int v, Side side) const;
  const Child& left(int v) const { return child(v, Side::left); }
  const Child& right(int v) const { return child(v, Side::right); }

  /// Throws NoSuchLeaf when ref does not name a leaf.
  Var leaf_label(const LeafRef& ref) const;
  /// All leaves, left to right.
  std::vector<LeafRef> leaves() const;
  /// The leaf with this label hanging from vertex, if any.
  std::optional<LeafRef> leaf_of(int vertex, Var label) const;
  std::vector<int> right_spine() const;
  /// Parent of v, or 0 for the root.
  int parent(int v) const;

  /// Nested `(v L R)` form, e.g. `(1 z (2 z a))`.
  std::string to_string() const;
  static LabeledTree parse(std::string_view text);
  nlohmann::json to_json() const;

  bool operator==(const LabeledTree&) const = default;

 private:
  void validate() const;

  std::vector<Child> left_;
  std::vector<Child> right_;
};

/// Throws MalformedCycles.
LabeledTree encode(const CycleForm& c);
CycleForm decode(const LabeledTree& t);

/// Turns the leaf into vertex n+1: a-leaf -> (z, a), any other -> (x, y).
LabeledTree grow(const LabeledTree& t, const LeafRef& leaf);

Polynomial tree_weight(const LabeledTree& t);

std::set<int> x_leaf_vertices(const LabeledTree& t);
std::set<int> z_leaf_vertices(const LabeledTree& t);

std::string leaf_to_string(const LeafRef& leaf);

}  // namespace dumont
