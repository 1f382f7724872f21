#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace corpusforge {

enum class ErrorUnit { word, character };

std::string_view to_string(ErrorUnit u) noexcept;
// Accepts "wer"/"word" and "cer"/"char"/"character".
ErrorUnit parse_error_unit(std::string_view name);

struct EvalPair {
  std::string id;
  std::string reference;
  std::string hypothesis;
};

struct EditSummary {
  std::uint64_t substitutions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t reference_length = 0;

  std::uint64_t edits() const noexcept { return substitutions + deletions + insertions; }
  // edits / reference_length; 0 when the reference is empty.
  double rate() const noexcept;

  EditSummary& operator+=(const EditSummary& o) noexcept;
  nlohmann::json to_json() const;
};

// Lowercase, strip .,!?;:"(), collapse whitespace. Word unit yields
// whitespace tokens; character unit yields the code points of the normalized
// string with single spaces kept.
std::vector<std::string> normalize_for_scoring(std::string_view text, ErrorUnit unit);

// Unit-cost Levenshtein alignment. Among minimal alignments the backtrace
// prefers substitution (or match), then deletion, then insertion.
EditSummary align(std::span<const std::string> reference, std::span<const std::string> hypothesis);

// Throws DataError when the normalized reference is empty.
EditSummary edit_rate(const EvalPair& pair, ErrorUnit unit);

// Pooled: sum of edits over sum of reference lengths. Throws UsageError on
// an empty list and DataError naming the first pair with an empty reference.
EditSummary corpus_rate(std::span<const EvalPair> pairs, ErrorUnit unit);

}  // namespace corpusforge
