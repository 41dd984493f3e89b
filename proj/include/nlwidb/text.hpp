#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nlwidb::text {

std::string to_lower(std::string_view s);

/// Splits on runs of ASCII whitespace; never yields empty pieces.
std::vector<std::string> split_whitespace(std::string_view s);

std::string join(std::span<const std::string> words, std::string_view sep = " ");

bool is_space(char c) noexcept;

/// True for an optional '-' followed by one or more digits.
bool is_integer(std::string_view s) noexcept;

} // namespace nlwidb::text
