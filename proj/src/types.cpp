#include "treebij/types.hpp"

#include <algorithm>
#include <string>

namespace treebij {

namespace {

std::string block_text(const TwoPartition::Block& b) {
  return "{" + std::to_string(b.first) + "," + std::to_string(b.second) + "}";
}

void collect_port_labels(const PortNode& node, std::vector<int>& labels) {
  labels.push_back(node.label);
  for (const PortNode& child : node.children) {
    if (child.label <= node.label) {
      throw ValidationError("edge " + std::to_string(node.label) + " -> " +
                            std::to_string(child.label) +
                            " is not increasing");
    }
    collect_port_labels(child, labels);
  }
}

int min_leaf(const PhyloNode& node) {
  if (node.is_leaf()) return node.leaf_label;
  int m = min_leaf(node.children.front());
  for (std::size_t i = 1; i < node.children.size(); ++i) {
    m = std::min(m, min_leaf(node.children[i]));
  }
  return m;
}

// Orders children by minimum leaf label, recursively; collects leaf labels.
void canonicalize_phylo(PhyloNode& node, std::vector<int>& leaves) {
  if (node.is_leaf()) {
    if (node.leaf_label < 1) {
      throw ValidationError("leaf label " + std::to_string(node.leaf_label) +
                            " is not a positive integer");
    }
    leaves.push_back(node.leaf_label);
    return;
  }
  if (node.children.size() != 2) {
    throw ValidationError("internal node must have exactly 2 children, got " +
                          std::to_string(node.children.size()));
  }
  for (PhyloNode& child : node.children) canonicalize_phylo(child, leaves);
  if (min_leaf(node.children[0]) > min_leaf(node.children[1])) {
    std::swap(node.children[0], node.children[1]);
  }
}

void check_label_set(std::vector<int> labels, const char* what) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int expected = static_cast<int>(i) + 1;
    if (labels[i] != expected) {
      if (i > 0 && labels[i] == labels[i - 1]) {
        throw ValidationError(std::string(what) + ": duplicate label " +
                              std::to_string(labels[i]));
      }
      throw ValidationError(std::string(what) + ": labels are not exactly {1,...," +
                            std::to_string(labels.size()) + "}");
    }
  }
}

}  // namespace

TrapezoidalWord TrapezoidalWord::from_digits(std::vector<int> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int bound = 2 * static_cast<int>(i + 1) - 1;
    if (digits[i] < 1 || digits[i] > bound) {
      throw ValidationError("digit " + std::to_string(digits[i]) +
                            " at index " + std::to_string(i + 1) +
                            " out of range [1, " + std::to_string(bound) + "]");
    }
  }
  TrapezoidalWord w;
  w.digits_ = std::move(digits);
  return w;
}

TwoPartition TwoPartition::from_blocks(std::vector<Block> blocks) {
  for (Block& b : blocks) {
    if (b.first == b.second) {
      throw ValidationError("block " + block_text(b) +
                            " must contain two distinct elements");
    }
    if (b.first > b.second) std::swap(b.first, b.second);
  }
  std::sort(blocks.begin(), blocks.end());

  const int n = static_cast<int>(blocks.size());
  std::vector<int> elements;
  elements.reserve(2 * static_cast<std::size_t>(n));
  for (const Block& b : blocks) {
    elements.push_back(b.first);
    elements.push_back(b.second);
  }
  std::sort(elements.begin(), elements.end());
  for (int i = 0; i < 2 * n; ++i) {
    if (elements[static_cast<std::size_t>(i)] != i + 1) {
      if (i > 0 && elements[static_cast<std::size_t>(i)] ==
                       elements[static_cast<std::size_t>(i) - 1]) {
        throw ValidationError("duplicate element " +
                              std::to_string(elements[static_cast<std::size_t>(i)]));
      }
      throw ValidationError("ground set is not {1,...," +
                            std::to_string(2 * n) + "}");
    }
  }

  TwoPartition p;
  p.blocks_ = std::move(blocks);
  return p;
}

const TwoPartition::Block& TwoPartition::block_containing(int element) const {
  for (const Block& b : blocks_) {
    if (b.first == element || b.second == element) return b;
  }
  throw ValidationError("element " + std::to_string(element) +
                        " is not in the partition");
}

Port Port::from_root(PortNode root) {
  if (root.label != 1) {
    throw ValidationError("root label must be 1, got " +
                          std::to_string(root.label));
  }
  std::vector<int> labels;
  collect_port_labels(root, labels);
  check_label_set(labels, "port");
  return Port(std::move(root), static_cast<int>(labels.size()));
}

PhyloTree PhyloTree::from_root(PhyloNode root) {
  std::vector<int> leaves;
  canonicalize_phylo(root, leaves);
  check_label_set(leaves, "phylogenetic tree leaves");
  return PhyloTree(std::move(root), static_cast<int>(leaves.size()));
}

}  // namespace treebij
