#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "treebij/types.hpp"

namespace treebij {

// One of the 2m-1 attachment positions of a port with m nodes: child slot
// `child_index` of the node labelled `parent_label` (0 = before all current
// children, arity = after the last one).
struct GapSlot {
  int parent_label = 0;
  int child_index = 0;

  bool operator==(const GapSlot&) const = default;
};

std::ostream& operator<<(std::ostream& os, const GapSlot& slot);

// The canonical numbering of attachment positions, defined recursively:
// slots(v) = [(v,0)], then for each child c_i in planar order: slots(c_i)
// followed by [(v,i)]. Always has length 2m-1.
std::vector<GapSlot> gap_positions(const Port& t);

// Attaches a new node labelled m+1 at gap_positions(t)[x] (1-based).
Port insert_node(const Port& t, int x);

// Deletes the node with the maximum label (always a leaf) and returns the
// 1-based gap index it occupied, so that insert_node(result, x) == t.
std::pair<Port, int> remove_max(const Port& t);

// Fold of insert_node over the digits, starting from the single-node port.
Port word_to_port(const TrapezoidalWord& w);

// Inverse fold via remove_max; exact inverse of word_to_port.
TrapezoidalWord port_to_word(const Port& t);

}  // namespace treebij
