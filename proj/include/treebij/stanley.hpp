#pragma once

#include <vector>

#include "treebij/types.hpp"

namespace treebij {

// A phylogenetic tree node annotated with its construction-order label.
// Leaves keep their own labels; internal non-root nodes carry a label from
// {n+2,...,2n}; the root carries neither and ranks above every label.
struct LabelledPhyloNode {
  int leaf_label = 0;     // >0 iff leaf
  int stanley_label = 0;  // >0 iff internal non-root
  std::vector<LabelledPhyloNode> children;  // empty or exactly two, canonical order

  bool is_leaf() const noexcept { return children.empty(); }
  bool operator==(const LabelledPhyloNode&) const = default;
};

// Assigns n+2,...,2n to the internal non-root nodes, in order: at each step,
// among unlabelled non-root internal nodes whose two children are both
// labelled (leaf labels count), the one whose children's minimum label is
// smallest receives the current label. Returns the canonical tree shape with
// the labels attached.
LabelledPhyloNode label_internal(const PhyloTree& t);

// Stanley coding: one block per internal node (root included), the pair of
// its two children's labels. A tree with n+1 leaves yields a 2-partition of
// {1,...,2n}. The single leaf maps to the empty partition.
TwoPartition phylo_to_partition(const PhyloTree& t);

// Inverse of the coding. Grows fragments rooted at labels 1,...,n+1 (leaves),
// then for each label l = n+2,...,2n joins the two fragments named by the
// unprocessed block that lies fully below l and contains the smallest entry;
// the one block left at the end joins the final two fragments at the root.
// Throws InvalidCodeError if the selection ever stalls.
PhyloTree partition_to_phylo(const TwoPartition& p);

}  // namespace treebij
