#include "treebij/verify.hpp"

#include <set>
#include <sstream>

#include "treebij/enumeration.hpp"
#include "treebij/growth.hpp"
#include "treebij/port_codec.hpp"
#include "treebij/stanley.hpp"
#include "treebij/text.hpp"

namespace treebij {

namespace {

// Distinctness of images is checked on canonical text, the equality medium
// for every family.
struct FamilySets {
  std::set<std::string> partitions;
  std::set<std::string> ports;
  std::set<std::string> phylos;
};

}  // namespace

VerifyReport verify_bijections(int n_max) {
  VerifyReport report;
  for (int n = 1; n <= n_max && report.ok; ++n) {
    const BigInt expected = double_factorial(2LL * n - 1);
    FamilySets seen;
    BigInt words = 0;

    WordEnumerator stream(n);
    while (auto next = stream.next()) {
      const TrapezoidalWord& w = *next;
      ++words;

      const TwoPartition p = word_to_partition(w);
      if (partition_to_word(p) != w) {
        report.ok = false;
        report.failure = "word->partition->word mismatch: " + format_word(w) +
                         " -> " + format_partition(p) + " -> " +
                         format_word(partition_to_word(p));
        break;
      }

      const Port t = word_to_port(w);
      if (port_to_word(t) != w) {
        report.ok = false;
        report.failure = "word->port->word mismatch: " + format_word(w) +
                         " -> " + format_port(t) + " -> " +
                         format_word(port_to_word(t));
        break;
      }

      const PhyloTree ph = partition_to_phylo(p);
      if (phylo_to_partition(ph) != p) {
        report.ok = false;
        report.failure = "partition->phylo->partition mismatch: " +
                         format_partition(p) + " -> " + format_phylo(ph) +
                         " -> " + format_partition(phylo_to_partition(ph));
        break;
      }

      seen.partitions.insert(format_partition(p));
      seen.ports.insert(format_port(t));
      seen.phylos.insert(format_phylo(ph));
    }

    if (!report.ok) {
      report.lines.push_back("n=" + std::to_string(n) + ": FAIL");
      break;
    }

    const bool counts_ok = words == expected &&
                           BigInt(seen.partitions.size()) == expected &&
                           BigInt(seen.ports.size()) == expected &&
                           BigInt(seen.phylos.size()) == expected;
    if (!counts_ok) {
      report.ok = false;
      std::ostringstream msg;
      msg << "count mismatch at n=" << n << ": expected " << expected
          << ", got " << words << " words, " << seen.partitions.size()
          << " partitions, " << seen.ports.size() << " ports, "
          << seen.phylos.size() << " phylogenetic trees";
      report.failure = msg.str();
      report.lines.push_back("n=" + std::to_string(n) + ": FAIL");
      break;
    }

    std::ostringstream line;
    line << "n=" << n << ": " << expected
         << " objects; word<->partition ok; word<->port ok; "
            "partition<->phylo ok; all images distinct";
    report.lines.push_back(line.str());
  }
  return report;
}

}  // namespace treebij
