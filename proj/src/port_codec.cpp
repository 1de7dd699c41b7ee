#include "treebij/port_codec.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace treebij {

namespace {

void collect_slots(const PortNode& node, std::vector<GapSlot>& slots) {
  slots.push_back({node.label, 0});
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    collect_slots(node.children[i], slots);
    slots.push_back({node.label, static_cast<int>(i) + 1});
  }
}

PortNode* find_node(PortNode& node, int label) {
  if (node.label == label) return &node;
  for (PortNode& child : node.children) {
    if (PortNode* hit = find_node(child, label)) return hit;
  }
  return nullptr;
}

// Locates the parent of the node carrying `label` and the child index under it.
std::pair<PortNode*, int> find_parent(PortNode& node, int label) {
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (node.children[i].label == label) {
      return {&node, static_cast<int>(i)};
    }
    auto hit = find_parent(node.children[i], label);
    if (hit.first != nullptr) return hit;
  }
  return {nullptr, 0};
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const GapSlot& slot) {
  return os << '(' << slot.parent_label << ',' << slot.child_index << ')';
}

std::vector<GapSlot> gap_positions(const Port& t) {
  std::vector<GapSlot> slots;
  slots.reserve(2 * static_cast<std::size_t>(t.node_count()) - 1);
  collect_slots(t.root(), slots);
  return slots;
}

Port insert_node(const Port& t, int x) {
  const int m = t.node_count();
  if (x < 1 || x > 2 * m - 1) {
    throw ValidationError("insertion index " + std::to_string(x) +
                          " out of range [1, " + std::to_string(2 * m - 1) +
                          "]");
  }
  const GapSlot slot = gap_positions(t)[static_cast<std::size_t>(x) - 1];
  PortNode root = t.root();
  PortNode* parent = find_node(root, slot.parent_label);
  parent->children.insert(parent->children.begin() + slot.child_index,
                          PortNode{m + 1, {}});
  return Port::from_root(std::move(root));
}

std::pair<Port, int> remove_max(const Port& t) {
  const int m = t.node_count();
  if (m < 2) {
    throw ValidationError("cannot remove from a single-node port");
  }
  PortNode root = t.root();
  auto [parent, index] = find_parent(root, m);
  const GapSlot slot{parent->label, index};
  parent->children.erase(parent->children.begin() + index);

  Port reduced = Port::from_root(std::move(root));
  const std::vector<GapSlot> slots = gap_positions(reduced);
  const auto it = std::find(slots.begin(), slots.end(), slot);
  const int x = static_cast<int>(it - slots.begin()) + 1;
  return {std::move(reduced), x};
}

Port word_to_port(const TrapezoidalWord& w) {
  Port t;
  for (int x : w.digits()) {
    t = insert_node(t, x);
  }
  return t;
}

TrapezoidalWord port_to_word(const Port& t) {
  std::vector<int> digits(static_cast<std::size_t>(t.node_count()) - 1);
  Port current = t;
  for (int i = t.node_count() - 1; i > 0; --i) {
    auto [reduced, x] = remove_max(current);
    digits[static_cast<std::size_t>(i) - 1] = x;
    current = std::move(reduced);
  }
  return TrapezoidalWord::from_digits(std::move(digits));
}

}  // namespace treebij
