#include "treebij/stanley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace treebij {

namespace {

LabelledPhyloNode annotate(const PhyloNode& node) {
  LabelledPhyloNode out;
  out.leaf_label = node.leaf_label;
  out.children.reserve(node.children.size());
  for (const PhyloNode& child : node.children) {
    out.children.push_back(annotate(child));
  }
  return out;
}

// The label a node contributes to its parent's block: its own leaf label for
// leaves, the assigned label otherwise.
int effective_label(const LabelledPhyloNode& node) {
  return node.is_leaf() ? node.leaf_label : node.stanley_label;
}

void collect_internal(LabelledPhyloNode& node, bool is_root,
                      std::vector<LabelledPhyloNode*>& internal) {
  if (node.is_leaf()) return;
  if (!is_root) internal.push_back(&node);
  for (LabelledPhyloNode& child : node.children) {
    collect_internal(child, false, internal);
  }
}

void collect_blocks(const LabelledPhyloNode& node,
                    std::vector<TwoPartition::Block>& blocks) {
  if (node.is_leaf()) return;
  blocks.emplace_back(effective_label(node.children[0]),
                      effective_label(node.children[1]));
  for (const LabelledPhyloNode& child : node.children) {
    collect_blocks(child, blocks);
  }
}

}  // namespace

LabelledPhyloNode label_internal(const PhyloTree& t) {
  LabelledPhyloNode root = annotate(t.root());
  std::vector<LabelledPhyloNode*> pending;
  collect_internal(root, true, pending);

  const int n = t.leaf_count() - 1;
  for (int label = n + 2; label <= 2 * n; ++label) {
    // Candidates: still unlabelled, both children already carry labels.
    LabelledPhyloNode* chosen = nullptr;
    int chosen_min = 0;
    for (LabelledPhyloNode* node : pending) {
      if (node->stanley_label != 0) continue;
      const int a = effective_label(node->children[0]);
      const int b = effective_label(node->children[1]);
      if (a == 0 || b == 0) continue;
      const int child_min = std::min(a, b);
      if (chosen == nullptr || child_min < chosen_min) {
        chosen = node;
        chosen_min = child_min;
      }
    }
    if (chosen == nullptr) {
      throw std::logic_error("labelling stalled: no candidate for label " +
                             std::to_string(label));
    }
    chosen->stanley_label = label;
  }
  return root;
}

TwoPartition phylo_to_partition(const PhyloTree& t) {
  if (t.leaf_count() == 1) return TwoPartition{};
  LabelledPhyloNode labelled = label_internal(t);
  std::vector<TwoPartition::Block> blocks;
  collect_blocks(labelled, blocks);
  return TwoPartition::from_blocks(std::move(blocks));
}

PhyloTree partition_to_phylo(const TwoPartition& p) {
  const int n = p.block_count();
  if (n == 0) return PhyloTree{};

  std::map<int, PhyloNode> fragments;
  for (int leaf = 1; leaf <= n + 1; ++leaf) {
    fragments[leaf] = PhyloNode{leaf, {}};
  }

  auto take_fragment = [&fragments](int key) {
    auto it = fragments.find(key);
    if (it == fragments.end()) {
      throw InvalidCodeError("block references label " + std::to_string(key) +
                             " with no fragment");
    }
    PhyloNode node = std::move(it->second);
    fragments.erase(it);
    return node;
  };

  std::vector<bool> processed(p.blocks().size(), false);
  for (int label = n + 2; label <= 2 * n + 1; ++label) {
    // Blocks are sorted by minimum, so the first unprocessed block lying
    // fully below `label` is the one containing the smallest entry. The
    // final round (label = 2n+1 stands in for the rootward join) takes the
    // single remaining block.
    const bool final_round = label == 2 * n + 1;
    std::size_t chosen = p.blocks().size();
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
      if (processed[i]) continue;
      const auto& [a, b] = p.blocks()[i];
      if (final_round || (a < label && b < label)) {
        chosen = i;
        break;
      }
    }
    if (chosen == p.blocks().size()) {
      throw InvalidCodeError("no block lies below label " +
                             std::to_string(label));
    }
    processed[chosen] = true;
    const auto& [a, b] = p.blocks()[chosen];
    PhyloNode joined;
    joined.children.push_back(take_fragment(a));
    joined.children.push_back(take_fragment(b));
    if (final_round) {
      return PhyloTree::from_root(std::move(joined));
    }
    fragments[label] = std::move(joined);
  }
  throw std::logic_error("unreachable: final block not joined");
}

}  // namespace treebij
