#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace staterep {

std::string trim(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Whitespace-delimited tokens; the harness-wide approximation of a "token"
// wherever no model tokenizer is available.
std::vector<std::string> whitespace_tokens(std::string_view text);
long count_whitespace_tokens(std::string_view text);

// Replaces every occurrence of `{key}` in `text`.
std::string replace_placeholder(std::string text, std::string_view key, std::string_view value);

bool contains(std::string_view haystack, std::string_view needle);

}  // namespace staterep
