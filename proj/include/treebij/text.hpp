#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "treebij/types.hpp"

namespace treebij {

// Text grammars (UTF-8, whitespace between tokens tolerated on input):
//   word       "x1,x2,...,xn" or ""            e.g. "1,2,5,5,2,4"
//   partition  "{a,b}{c,d}..." or ""           e.g. "{1,3}{2,10}"
//   port       label | label(c1,...,ck)        e.g. "1(3(4),2(5))"
//   phylo      leaf-label | (A,B)              e.g. "(((1,4),6),((2,(5,7)),3))"
// format_* always emits canonical text; parse_* accepts any valid spelling
// and canonicalizes.

TrapezoidalWord parse_word(std::string_view text);
std::string format_word(const TrapezoidalWord& w);

TwoPartition parse_partition(std::string_view text);
std::string format_partition(const TwoPartition& p);

Port parse_port(std::string_view text);
std::string format_port(const Port& t);

PhyloTree parse_phylo(std::string_view text);
std::string format_phylo(const PhyloTree& t);

std::ostream& operator<<(std::ostream& os, const TrapezoidalWord& w);
std::ostream& operator<<(std::ostream& os, const TwoPartition& p);
std::ostream& operator<<(std::ostream& os, const Port& t);
std::ostream& operator<<(std::ostream& os, const PhyloTree& t);

}  // namespace treebij
