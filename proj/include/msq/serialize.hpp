#pragma once

// Structure-constant cache files (JSON) and small file helpers.
//
// {"header": {"format_version", "a_label", "b_label", "epsilon", "dim",
//             "bracket_scaling"},
//  "basis_labels": [...],
//  "brackets": [[i, j, [[k, "num/den"], ...]], ...]}   with i < j

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "msq/titslie.hpp"

namespace msq {

inline constexpr int kCacheFormatVersion = 1;

std::string serialize_lie(const LieAlgebra& l);
// Throws Error{kBadFormat} or Error{kVersionMismatch}.
LieAlgebra parse_lie(std::string_view text);

std::optional<std::string> read_file(const std::filesystem::path& p);
// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& p, const std::string& content);

}  // namespace msq
