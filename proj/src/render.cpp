#include "treebij/render.hpp"

#include <string>

#include "treebij/stanley.hpp"

namespace treebij {

namespace {

void port_dot_edges(const PortNode& node, std::string& out) {
  for (const PortNode& child : node.children) {
    out += "  " + std::to_string(node.label) + " -> " +
           std::to_string(child.label) + ";\n";
  }
  for (const PortNode& child : node.children) {
    port_dot_edges(child, out);
  }
}

// Nodes are identified by preorder position; leaves show their label,
// internal nodes show the construction-order label or nothing.
int phylo_dot_nodes(const LabelledPhyloNode& node, bool stanley_labels,
                    int next_id, std::string& out) {
  const int id = next_id++;
  std::string label;
  if (node.is_leaf()) {
    label = std::to_string(node.leaf_label);
  } else if (stanley_labels && node.stanley_label != 0) {
    label = std::to_string(node.stanley_label);
  }
  out += "  n" + std::to_string(id) + " [label=\"" + label + "\"];\n";
  for (const LabelledPhyloNode& child : node.children) {
    const int child_id = next_id;
    next_id = phylo_dot_nodes(child, stanley_labels, next_id, out);
    out += "  n" + std::to_string(id) + " -> n" + std::to_string(child_id) +
           ";\n";
  }
  return next_id;
}

template <typename Node, typename Text>
void ascii_tree(const Node& node, const std::string& prefix, bool last,
                bool root, Text&& text, std::string& out) {
  if (root) {
    out += text(node);
  } else {
    out += prefix + (last ? "`-- " : "|-- ") + text(node);
  }
  out += '\n';
  const std::string child_prefix =
      root ? "" : prefix + (last ? "    " : "|   ");
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    ascii_tree(node.children[i], child_prefix, i + 1 == node.children.size(),
               false, text, out);
  }
}

}  // namespace

std::string render_port_dot(const Port& t) {
  std::string out = "digraph port {\n  graph [ordering=out];\n";
  out += "  node [shape=circle];\n";
  port_dot_edges(t.root(), out);
  if (t.node_count() == 1) out += "  1;\n";
  return out + "}\n";
}

std::string render_phylo_dot(const PhyloTree& t, bool stanley_labels) {
  const LabelledPhyloNode root = label_internal(t);
  std::string out = "digraph phylo {\n  node [shape=circle];\n";
  phylo_dot_nodes(root, stanley_labels, 0, out);
  return out + "}\n";
}

std::string render_port_ascii(const Port& t) {
  std::string out;
  ascii_tree(t.root(), "", true, true,
             [](const PortNode& n) { return std::to_string(n.label); }, out);
  return out;
}

std::string render_phylo_ascii(const PhyloTree& t, bool stanley_labels) {
  const LabelledPhyloNode root = label_internal(t);
  std::string out;
  ascii_tree(root, "", true, true,
             [stanley_labels](const LabelledPhyloNode& n) -> std::string {
               if (n.is_leaf()) return std::to_string(n.leaf_label);
               if (stanley_labels && n.stanley_label != 0) {
                 return std::to_string(n.stanley_label);
               }
               return "*";
             },
             out);
  return out;
}

}  // namespace treebij
