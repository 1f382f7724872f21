#pragma once

#include <string>
#include <string_view>
#include <vector>

// Unicode-aware text helpers shared by the lexicon, rechain and metrics code.
// All strings are UTF-8.
namespace corpusforge::text {

// Unicode NFC, full lowercase (root locale), leading/trailing whitespace trimmed.
// Throws DataError on invalid UTF-8.
std::string normalize_word(std::string_view word);

// NFC + lowercase, characters in kStrippedPunctuation removed, whitespace runs
// collapsed to one ASCII space, trimmed.
std::string normalize_sentence(std::string_view sentence);

// Whitespace tokens of normalize_sentence().
std::vector<std::string> tokenize(std::string_view sentence);

// Splits a UTF-8 string into code points, each returned as its own string.
std::vector<std::string> code_points(std::string_view s);

std::string_view trim(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

inline constexpr std::string_view kStrippedPunctuation = ".,!?;:\"()";

}  // namespace corpusforge::text
