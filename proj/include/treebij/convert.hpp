#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "treebij/types.hpp"

namespace treebij {

// The four families, ordered along the codec path port - word - partition -
// phylo; conversions compose stepwise along that path.
enum class Kind { port, word, partition, phylo };

std::optional<Kind> kind_from_string(std::string_view name);
std::string_view to_string(Kind kind);

// Parses `input` as `from`, routes through the bijections, and returns the
// canonical text of `to`. Throws ParseError / ValidationError on bad input.
std::string convert_text(Kind from, Kind to, std::string_view input);

}  // namespace treebij
