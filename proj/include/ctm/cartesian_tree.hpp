#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ctm/sequence.hpp"

namespace ctm {

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();

// Min-rooted Cartesian tree. Node k is position k of the source sequence
// (0-based), so an in-order walk visits 0, 1, ..., size()-1.
struct CartesianTree {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::size_t root = kNoNode;

  std::size_t size() const noexcept { return parent.size(); }
  bool empty() const noexcept { return parent.empty(); }

  // Shape equality: same parent links imply same children and root.
  friend bool operator==(const CartesianTree&, const CartesianTree&) = default;
};

// Push/pop counters of the right-branch stack, for amortization checks.
struct BuildStats {
  std::size_t pushes = 0;
  std::size_t pops = 0;
};

// Online construction: each new position pops the right-branch entries that
// are larger, adopts the last popped one as its left child and becomes the
// right child of the remaining top.
template <SequenceValue T>
CartesianTree build_cartesian_tree(std::span<const T> x,
                                   BuildStats* stats = nullptr) {
  const std::size_t m = x.size();
  CartesianTree t;
  t.parent.assign(m, kNoNode);
  t.left.assign(m, kNoNode);
  t.right.assign(m, kNoNode);

  std::vector<std::size_t> branch;
  branch.reserve(m);
  for (std::size_t h = 0; h < m; ++h) {
    std::size_t last = kNoNode;
    while (!branch.empty() && position_less(x, h, branch.back())) {
      last = branch.back();
      branch.pop_back();
      if (stats) ++stats->pops;
    }
    if (last != kNoNode) {
      t.left[h] = last;
      t.parent[last] = h;
    }
    if (!branch.empty()) {
      t.right[branch.back()] = h;
      t.parent[h] = branch.back();
    }
    branch.push_back(h);
    if (stats) ++stats->pushes;
  }
  t.root = branch.empty() ? kNoNode : branch.front();
  return t;
}

template <SequenceValue T>
CartesianTree build_cartesian_tree(const std::vector<T>& x,
                                   BuildStats* stats = nullptr) {
  return build_cartesian_tree(std::span<const T>(x), stats);
}

// Nodes met from `from` following right (resp. left) children.
inline std::vector<std::size_t> right_branch_from(const CartesianTree& t,
                                                  std::size_t from) {
  std::vector<std::size_t> out;
  for (std::size_t v = from; v != kNoNode; v = t.right[v]) out.push_back(v);
  return out;
}

inline std::vector<std::size_t> left_branch_from(const CartesianTree& t,
                                                 std::size_t from) {
  std::vector<std::size_t> out;
  for (std::size_t v = from; v != kNoNode; v = t.left[v]) out.push_back(v);
  return out;
}

inline std::vector<std::size_t> right_branch(const CartesianTree& t) {
  return right_branch_from(t, t.root);
}

inline std::vector<std::size_t> left_branch(const CartesianTree& t) {
  return left_branch_from(t, t.root);
}

// Length of the rightmost / leftmost path of the subtree rooted at `from`
// (0 for an absent subtree).
inline std::size_t rightmost_path_length(const CartesianTree& t,
                                         std::size_t from) {
  std::size_t n = 0;
  for (std::size_t v = from; v != kNoNode; v = t.right[v]) ++n;
  return n;
}

inline std::size_t leftmost_path_length(const CartesianTree& t,
                                        std::size_t from) {
  std::size_t n = 0;
  for (std::size_t v = from; v != kNoNode; v = t.left[v]) ++n;
  return n;
}

// Number of nodes in the subtree rooted at each node.
inline std::vector<std::size_t> subtree_sizes(const CartesianTree& t) {
  std::vector<std::size_t> size(t.size(), 1);
  // Post-order over an explicit stack; degenerate trees are m deep.
  std::vector<std::pair<std::size_t, bool>> stack;
  if (t.root != kNoNode) stack.emplace_back(t.root, false);
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      if (t.left[v] != kNoNode) size[v] += size[t.left[v]];
      if (t.right[v] != kNoNode) size[v] += size[t.right[v]];
      continue;
    }
    stack.emplace_back(v, true);
    if (t.left[v] != kNoNode) stack.emplace_back(t.left[v], false);
    if (t.right[v] != kNoNode) stack.emplace_back(t.right[v], false);
  }
  return size;
}

template <SequenceValue T, SequenceValue U>
bool ct_equal(std::span<const T> x, std::span<const U> y) {
  if (x.size() != y.size()) return false;
  return build_cartesian_tree(x).parent == build_cartesian_tree(y).parent;
}

template <SequenceValue T, SequenceValue U>
bool ct_equal(const std::vector<T>& x, const std::vector<U>& y) {
  return ct_equal(std::span<const T>(x), std::span<const U>(y));
}

// Rebuilds the tree encoded by a parent-distance table. Throws InvalidInput
// when the table does not describe any tree.
inline CartesianTree tree_from_parent_distance(std::span<const std::uint32_t> pd) {
  const std::size_t m = pd.size();
  CartesianTree t;
  t.parent.assign(m, kNoNode);
  t.left.assign(m, kNoNode);
  t.right.assign(m, kNoNode);
  std::vector<std::size_t> branch;
  for (std::size_t h = 0; h < m; ++h) {
    if (pd[h] > h)
      throw Error(ErrorKind::InvalidInput, "parent distance exceeds position");
    const std::size_t target = pd[h] == 0 ? kNoNode : h - pd[h];
    std::size_t last = kNoNode;
    while (!branch.empty() && branch.back() != target) {
      last = branch.back();
      branch.pop_back();
    }
    if (target != kNoNode && branch.empty())
      throw Error(ErrorKind::InvalidInput,
                  "parent distance points off the right branch");
    if (last != kNoNode) {
      t.left[h] = last;
      t.parent[last] = h;
    }
    if (!branch.empty()) {
      t.right[branch.back()] = h;
      t.parent[h] = branch.back();
    }
    branch.push_back(h);
  }
  t.root = branch.empty() ? kNoNode : branch.front();
  return t;
}

// A permutation of 1..m whose Cartesian tree is `t`: values follow a preorder
// walk, so every parent gets a smaller value than its children.
inline std::vector<std::int64_t> realize(const CartesianTree& t) {
  std::vector<std::int64_t> values(t.size());
  std::int64_t next = 1;
  std::vector<std::size_t> stack;
  if (t.root != kNoNode) stack.push_back(t.root);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    values[v] = next++;
    if (t.right[v] != kNoNode) stack.push_back(t.right[v]);
    if (t.left[v] != kNoNode) stack.push_back(t.left[v]);
  }
  return values;
}

}  // namespace ctm
