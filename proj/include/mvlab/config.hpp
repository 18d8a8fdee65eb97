#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mvlab/logic.hpp"

namespace mvlab {

inline constexpr std::string_view kLogicFormat = "mvlab-logic";
inline constexpr int kLogicFormatVersion = 1;

/// Reads a logic definition. Throws ConfigError with a diagnostic on any
/// schema or invariant violation.
Logic logic_from_json(const nlohmann::json& doc);
nlohmann::json logic_to_json(const Logic& logic);
/// The same document laid out one table row per line.
std::string logic_to_text(const Logic& logic);

Logic load_logic_file(const std::string& path);

/// A builtin name (case-insensitive) or a path to a logic file.
Logic resolve_logic(std::string_view ref, const std::vector<Logic>& registry);

}  // namespace mvlab
