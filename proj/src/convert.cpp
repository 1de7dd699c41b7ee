#include "treebij/convert.hpp"

#include <variant>

#include "treebij/growth.hpp"
#include "treebij/port_codec.hpp"
#include "treebij/stanley.hpp"
#include "treebij/text.hpp"

namespace treebij {

namespace {

// Variant alternatives in path order, so the variant index doubles as the
// position on the codec path.
using Object = std::variant<Port, TrapezoidalWord, TwoPartition, PhyloTree>;

Object parse_as(Kind kind, std::string_view input) {
  switch (kind) {
    case Kind::port: return parse_port(input);
    case Kind::word: return parse_word(input);
    case Kind::partition: return parse_partition(input);
    case Kind::phylo: return parse_phylo(input);
  }
  throw std::logic_error("unknown kind");
}

Object step_toward_phylo(Object obj) {
  switch (obj.index()) {
    case 0: return port_to_word(std::get<Port>(obj));
    case 1: return word_to_partition(std::get<TrapezoidalWord>(obj));
    case 2: return partition_to_phylo(std::get<TwoPartition>(obj));
  }
  throw std::logic_error("cannot step past phylo");
}

Object step_toward_port(Object obj) {
  switch (obj.index()) {
    case 1: return word_to_port(std::get<TrapezoidalWord>(obj));
    case 2: return partition_to_word(std::get<TwoPartition>(obj));
    case 3: return phylo_to_partition(std::get<PhyloTree>(obj));
  }
  throw std::logic_error("cannot step past port");
}

}  // namespace

std::optional<Kind> kind_from_string(std::string_view name) {
  if (name == "port") return Kind::port;
  if (name == "word") return Kind::word;
  if (name == "partition") return Kind::partition;
  if (name == "phylo") return Kind::phylo;
  return std::nullopt;
}

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::port: return "port";
    case Kind::word: return "word";
    case Kind::partition: return "partition";
    case Kind::phylo: return "phylo";
  }
  return "?";
}

std::string convert_text(Kind from, Kind to, std::string_view input) {
  Object obj = parse_as(from, input);
  const auto target = static_cast<std::size_t>(to);
  while (obj.index() < target) obj = step_toward_phylo(std::move(obj));
  while (obj.index() > target) obj = step_toward_port(std::move(obj));

  switch (obj.index()) {
    case 0: return format_port(std::get<Port>(obj));
    case 1: return format_word(std::get<TrapezoidalWord>(obj));
    case 2: return format_partition(std::get<TwoPartition>(obj));
    default: return format_phylo(std::get<PhyloTree>(obj));
  }
}

}  // namespace treebij
