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

#include "dumont/trees.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <span>

#include "dumont/error.hpp"

namespace dumont {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedTree(what); }

}  // namespace

LabeledTree LabeledTree::base() {
  LabeledTree t;
  t.left_ = {Child::leaf(Var::z)};
  t.right_ = {Child::leaf(Var::a)};
  return t;
}

LabeledTree LabeledTree::from_children(std::vector<std::pair<Child, Child>> children) {
  LabeledTree t;
  for (auto& [l, r] : children) {
    t.left_.push_back(l);
    t.right_.push_back(r);
  }
  t.validate();
  return t;
}

const Child& LabeledTree::child(int v, Side side) const {
  if (v < 1 || v > size()) throw NoSuchLeaf("no vertex " + std::to_string(v));
  auto i = static_cast<std::size_t>(v - 1);
  return side == Side::left ? left_[i] : right_[i];
}

Var LabeledTree::leaf_label(const LeafRef& ref) const {
  const Child& c = child(ref.parent, ref.side);
  if (!c.is_leaf()) throw NoSuchLeaf(leaf_to_string(ref) + " is an internal vertex");
  return c.label;
}

std::vector<LeafRef> LabeledTree::leaves() const {
  std::vector<LeafRef> out;
  auto walk = [&](auto&& self, int v) -> void {
    for (Side s : {Side::left, Side::right}) {
      const Child& c = child(v, s);
      if (c.is_leaf()) {
        out.push_back({v, s});
      } else {
        self(self, c.vertex);
      }
    }
  };
  if (size() > 0) walk(walk, 1);
  return out;
}

std::optional<LeafRef> LabeledTree::leaf_of(int vertex, Var label) const {
  if (vertex < 1 || vertex > size()) return std::nullopt;
  for (Side s : {Side::left, Side::right}) {
    const Child& c = child(vertex, s);
    if (c.is_leaf() && c.label == label) return LeafRef{vertex, s};
  }
  return std::nullopt;
}

std::vector<int> LabeledTree::right_spine() const {
  std::vector<int> spine;
  for (int v = 1; v != 0 && v <= size(); v = right(v).vertex) spine.push_back(v);
  return spine;
}

int LabeledTree::parent(int v) const {
  for (int u = 1; u <= size(); ++u)
    if (left(u).vertex == v || right(u).vertex == v) return u;
  return 0;
}

void LabeledTree::validate() const {
  const int n = size();
  if (n < 1) malformed("a tree needs at least one vertex");

  std::vector<int> parent_of(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) {
    for (Side s : {Side::left, Side::right}) {
      const Child& c = child(v, s);
      if (c.is_leaf()) continue;
      if (c.vertex <= v || c.vertex > n)
        malformed("child " + std::to_string(c.vertex) + " of " + std::to_string(v) + " breaks increasing order");
      if (parent_of[static_cast<std::size_t>(c.vertex)] != 0)
        malformed("vertex " + std::to_string(c.vertex) + " has two parents");
      parent_of[static_cast<std::size_t>(c.vertex)] = v;
    }
  }
  // Every vertex other than 1 now has a smaller parent, so all are reachable.
  for (int v = 2; v <= n; ++v)
    if (parent_of[static_cast<std::size_t>(v)] == 0) malformed("vertex " + std::to_string(v) + " is detached");

  std::vector<bool> on_spine(static_cast<std::size_t>(n) + 1, false);
  for (int v : right_spine()) on_spine[static_cast<std::size_t>(v)] = true;

  for (int v = 1; v <= n; ++v) {
    const Child& l = left(v);
    const Child& r = right(v);
    bool spine = on_spine[static_cast<std::size_t>(v)];
    if (l.is_leaf() && l.label != (spine ? Var::z : Var::x))
      malformed(std::string("left leaf of ") + std::to_string(v) + " must be " + (spine ? "z" : "x"));
    if (r.is_leaf() && r.label != (spine ? Var::a : Var::y))
      malformed(std::string("right leaf of ") + std::to_string(v) + " must be " + (spine ? "a" : "y"));
  }
}

namespace {

void render(const LabeledTree& t, const Child& c, std::string& out) {
  if (c.is_leaf()) {
    out += var_name(c.label);
    return;
  }
  out += "(" + std::to_string(c.vertex) + " ";
  render(t, t.left(c.vertex), out);
  out += " ";
  render(t, t.right(c.vertex), out);
  out += ")";
}

nlohmann::json child_json(const LabeledTree& t, const Child& c) {
  if (c.is_leaf()) return std::string(1, var_name(c.label));
  return {{"v", c.vertex}, {"left", child_json(t, t.left(c.vertex))}, {"right", child_json(t, t.right(c.vertex))}};
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LabeledTree parse() {
    Child root = child();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    if (root.is_leaf() || root.vertex != 1) fail("root must be vertex 1");
    int n = static_cast<int>(children_.size());
    std::vector<std::pair<Child, Child>> ordered;
    for (int v = 1; v <= n; ++v) {
      auto it = children_.find(v);
      if (it == children_.end()) fail("vertices must be exactly 1.." + std::to_string(n));
      ordered.push_back(it->second);
    }
    return LabeledTree::from_children(std::move(ordered));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedTree(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Child child() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (auto v = var_from_char(c); v && c != 'b') {
      ++pos_;
      return Child::leaf(*v);
    }
    if (c != '(') fail("expected '(' or a leaf label");
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a vertex number");
    int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    Child l = child();
    Child r = child();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
    ++pos_;
    if (!children_.emplace(v, std::make_pair(l, r)).second) fail("duplicate vertex " + std::to_string(v));
    return Child::node(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<int, std::pair<Child, Child>> children_;
};

// Complete increasing binary tree of a word: its minimum is the root, the
// parts to the left and right become the subtrees.
Child build_word_tree(std::span<const int> word, std::vector<std::pair<Child, Child>>& children) {
  auto it = std::min_element(word.begin(), word.end());
  auto k = static_cast<std::size_t>(it - word.begin());
  int v = *it;
  auto left_part = word.subspan(0, k);
  auto right_part = word.subspan(k + 1);
  auto& slot = children[static_cast<std::size_t>(v - 1)];
  slot.first = left_part.empty() ? Child::leaf(Var::x) : build_word_tree(left_part, children);
  slot.second = right_part.empty() ? Child::leaf(Var::y) : build_word_tree(right_part, children);
  return Child::node(v);
}

void in_order(const LabeledTree& t, int v, std::vector<int>& out) {
  if (!t.left(v).is_leaf()) in_order(t, t.left(v).vertex, out);
  out.push_back(v);
  if (!t.right(v).is_leaf()) in_order(t, t.right(v).vertex, out);
}

}  // namespace

std::string LabeledTree::to_string() const {
  std::string out;
  if (size() > 0) render(*this, Child::node(1), out);
  return out;
}

LabeledTree LabeledTree::parse(std::string_view text) { return TreeParser(text).parse(); }

nlohmann::json LabeledTree::to_json() const { return child_json(*this, Child::node(1)); }

LabeledTree encode(const CycleForm& c) {
  c.validate();
  const int n = c.size();
  if (n < 1) throw MalformedCycles("cannot encode the empty permutation");
  std::vector<std::pair<Child, Child>> children(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < c.cycles.size(); ++k) {
    const auto& cycle = c.cycles[k];
    auto& root = children[static_cast<std::size_t>(cycle.front() - 1)];
    root.first = cycle.size() == 1
                     ? Child::leaf(Var::z)
                     : build_word_tree(std::span<const int>(cycle).subspan(1), children);
    root.second = k + 1 < c.cycles.size() ? Child::node(c.cycles[k + 1].front()) : Child::leaf(Var::a);
  }
  return LabeledTree::from_children(std::move(children));
}

CycleForm decode(const LabeledTree& t) {
  CycleForm form;
  for (int m : t.right_spine()) {
    std::vector<int> cycle = {m};
    if (!t.left(m).is_leaf()) in_order(t, t.left(m).vertex, cycle);
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

LabeledTree grow(const LabeledTree& t, const LeafRef& leaf) {
  Var label = t.leaf_label(leaf);
  const int v = t.size() + 1;
  std::vector<std::pair<Child, Child>> children;
  for (int u = 1; u <= t.size(); ++u) children.emplace_back(t.left(u), t.right(u));
  auto& slot = children[static_cast<std::size_t>(leaf.parent - 1)];
  (leaf.side == Side::left ? slot.first : slot.second) = Child::node(v);
  if (label == Var::a) {
    children.emplace_back(Child::leaf(Var::z), Child::leaf(Var::a));
  } else {
    children.emplace_back(Child::leaf(Var::x), Child::leaf(Var::y));
  }
  return LabeledTree::from_children(std::move(children));
}

Polynomial tree_weight(const LabeledTree& t) {
  Monomial m;
  for (const auto& leaf : t.leaves()) {
    Var v = t.leaf_label(leaf);
    m.set_exponent(v, m.exponent(v) + 1);
  }
  return Polynomial(m);
}

std::set<int> x_leaf_vertices(const LabeledTree& t) {
  std::set<int> out;
  for (const auto& leaf : t.leaves())
    if (t.leaf_label(leaf) == Var::x) out.insert(leaf.parent);
  return out;
}

std::set<int> z_leaf_vertices(const LabeledTree& t) {
  std::set<int> out;
  for (const auto& leaf : t.leaves())
    if (t.leaf_label(leaf) == Var::z) out.insert(leaf.parent);
  return out;
}

std::string leaf_to_string(const LeafRef& leaf) {
  return std::string(leaf.side == Side::left ? "left" : "right") + " leaf of " + std::to_string(leaf.parent);
}

}  // namespace dumont
