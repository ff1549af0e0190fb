#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "efgsolve/core/strategy.hpp"

namespace efg {

// Strategy text format, one line per information set:
//
//   <player>\t<infoset_key_hex>\t<p0>,<p1>,...,<pk>
//
// Probabilities use 17 significant digits so that parsing restores the exact
// doubles. Lines are sorted by (player, key).
std::string format_strategy(const StrategyProfile& profile);
StrategyProfile parse_strategy(std::string_view text);

void write_strategy_file(const std::filesystem::path& path, const StrategyProfile& profile);
StrategyProfile read_strategy_file(const std::filesystem::path& path);

}  // namespace efg
