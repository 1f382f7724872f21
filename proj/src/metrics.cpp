#include "corpusforge/metrics.hpp"

#include <algorithm>

#include "corpusforge/error.hpp"
#include "corpusforge/text.hpp"

namespace corpusforge {

std::string_view to_string(ErrorUnit u) noexcept { return u == ErrorUnit::word ? "wer" : "cer"; }

ErrorUnit parse_error_unit(std::string_view name) {
  if (name == "wer" || name == "word") return ErrorUnit::word;
  if (name == "cer" || name == "char" || name == "character") return ErrorUnit::character;
  throw UsageError("unknown error-rate mode '" + std::string(name) + "' (expected wer or cer)");
}

double EditSummary::rate() const noexcept {
  if (reference_length == 0) return 0.0;
  return static_cast<double>(edits()) / static_cast<double>(reference_length);
}

EditSummary& EditSummary::operator+=(const EditSummary& o) noexcept {
  substitutions += o.substitutions;
  deletions += o.deletions;
  insertions += o.insertions;
  reference_length += o.reference_length;
  return *this;
}

nlohmann::json EditSummary::to_json() const {
  return {
      {"substitutions", substitutions},
      {"deletions", deletions},
      {"insertions", insertions},
      {"reference_length", reference_length},
      {"rate", rate()},
  };
}

std::vector<std::string> normalize_for_scoring(std::string_view s, ErrorUnit unit) {
  if (unit == ErrorUnit::word) return text::tokenize(s);
  return text::code_points(text::normalize_sentence(s));
}

EditSummary align(std::span<const std::string> ref, std::span<const std::string> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  // cost[i][j]: distance between ref[0, i) and hyp[0, j)
  std::vector<std::uint32_t> cost((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return cost[i * (m + 1) + j]; };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = std::min({at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0u : 1u),
                           at(i - 1, j) + 1, at(i, j - 1) + 1});

  EditSummary s;
  s.reference_length = n;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = ref[i - 1] == hyp[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0u : 1u)) {
        if (!same) ++s.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ++s.deletions;
      --i;
    } else {
      ++s.insertions;
      --j;
    }
  }
  return s;
}

EditSummary edit_rate(const EvalPair& pair, ErrorUnit unit) {
  const auto ref = normalize_for_scoring(pair.reference, unit);
  if (ref.empty())
    throw DataError("pair '" + pair.id + "': reference is empty after normalization");
  return align(ref, normalize_for_scoring(pair.hypothesis, unit));
}

EditSummary corpus_rate(std::span<const EvalPair> pairs, ErrorUnit unit) {
  if (pairs.empty()) throw UsageError("no evaluation pairs");
  EditSummary total;
  for (const auto& p : pairs) total += edit_rate(p, unit);
  return total;
}

}  // namespace corpusforge
