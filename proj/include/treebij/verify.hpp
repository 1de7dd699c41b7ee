#pragma once

#include <string>
#include <vector>

#include "treebij/types.hpp"

namespace treebij {

// Outcome of the exhaustive bijectivity check for sizes 1..n_max: every word
// must round-trip through partitions, ports and phylogenetic trees, the
// images within each family must be pairwise distinct, and all counts must
// equal (2n-1)!!.
struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;  // one per n
  std::string failure;             // first counterexample, canonical text
};

VerifyReport verify_bijections(int n_max);

}  // namespace treebij
