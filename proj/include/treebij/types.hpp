#pragma once

#include <utility>
#include <vector>

#include "treebij/errors.hpp"

namespace treebij {

// Digit sequence x_1..x_n with 1 <= x_i <= 2i-1. n = 0 is the empty word.
class TrapezoidalWord {
public:
  TrapezoidalWord() = default;

  // Validates the trapezoidal bound per digit.
  static TrapezoidalWord from_digits(std::vector<int> digits);

  const std::vector<int>& digits() const noexcept { return digits_; }
  int length() const noexcept { return static_cast<int>(digits_.size()); }
  bool empty() const noexcept { return digits_.empty(); }

  bool operator==(const TrapezoidalWord&) const = default;

private:
  std::vector<int> digits_;
};

// Partition of {1,...,2n} into n unordered pairs. Canonical form: within each
// block the smaller element first, blocks sorted by ascending smaller element.
class TwoPartition {
public:
  using Block = std::pair<int, int>;

  TwoPartition() = default;

  // Canonicalizes, then validates disjointness and coverage of {1,...,2n}.
  static TwoPartition from_blocks(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int ground_size() const noexcept { return 2 * block_count(); }
  bool empty() const noexcept { return blocks_.empty(); }

  // The block containing `element`, or throws ValidationError.
  const Block& block_containing(int element) const;

  bool operator==(const TwoPartition&) const = default;

private:
  std::vector<Block> blocks_;
};

struct PortNode {
  int label = 1;
  std::vector<PortNode> children;  // planar order, significant

  bool operator==(const PortNode&) const = default;
};

// Rooted planar tree on labels {1,...,m}, root labelled 1, labels strictly
// increasing from parent to child.
class Port {
public:
  Port() : root_{}, node_count_(1) {}  // the single-node tree "1"

  static Port from_root(PortNode root);

  const PortNode& root() const noexcept { return root_; }
  int node_count() const noexcept { return node_count_; }

  bool operator==(const Port&) const = default;

private:
  Port(PortNode root, int count) : root_(std::move(root)), node_count_(count) {}

  PortNode root_;
  int node_count_;
};

struct PhyloNode {
  int leaf_label = 0;              // >0 iff leaf
  std::vector<PhyloNode> children; // empty for a leaf, exactly two otherwise

  bool is_leaf() const noexcept { return children.empty(); }
  bool operator==(const PhyloNode&) const = default;
};

// Rooted strictly-binary tree with leaves labelled {1,...,n+1}, children
// unordered. Nonplanarity is realized as a normal form: at every internal
// node the child whose subtree contains the smaller minimum leaf label comes
// first, so equality of trees is equality of representations.
class PhyloTree {
public:
  PhyloTree() : root_{1, {}}, leaf_count_(1) {}  // the single leaf "1"

  // Canonicalizes child order, then validates arity and leaf labels.
  static PhyloTree from_root(PhyloNode root);

  const PhyloNode& root() const noexcept { return root_; }
  int leaf_count() const noexcept { return leaf_count_; }

  bool operator==(const PhyloTree&) const = default;

private:
  PhyloTree(PhyloNode root, int leaves)
      : root_(std::move(root)), leaf_count_(leaves) {}

  PhyloNode root_;
  int leaf_count_;
};

}  // namespace treebij
