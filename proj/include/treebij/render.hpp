#pragma once

#include <string>

#include "treebij/types.hpp"

namespace treebij {

// Graphviz DOT output. Port children keep their planar order through the
// `ordering=out` hint and the emission order of edges.
std::string render_port_dot(const Port& t);

// Phylogenetic trees render internal nodes without text; with
// `stanley_labels` they carry the construction-order labels n+2,...,2n
// (the root stays blank).
std::string render_phylo_dot(const PhyloTree& t, bool stanley_labels);

// Indented tree listing, one node per line.
std::string render_port_ascii(const Port& t);
std::string render_phylo_ascii(const PhyloTree& t, bool stanley_labels);

}  // namespace treebij
