#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpusforge/dataset.hpp"
#include "json.hpp"

namespace corpusforge {

// Recorded words: normalized orthography -> recording references (audio
// paths) in manifest order. Iteration order is lexicographic by word.
class WordInventory {
 public:
  void add(std::string_view word, std::string recording);

  // Every entry of the manifest; with `speaker` set, only that speaker's.
  static WordInventory from_manifest(const RecordingManifest& manifest,
                                     std::optional<std::string_view> speaker = std::nullopt);

  bool contains(std::string_view normalized_word) const;
  // First recording in manifest order. Throws OovError when absent.
  const std::string& first_recording(std::string_view normalized_word) const;
  const std::vector<std::string>& recordings(std::string_view normalized_word) const;

  std::vector<std::string> words() const;
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> items_;
};

enum class Provenance { manual, llm, random };

std::string_view to_string(Provenance p) noexcept;
Provenance parse_provenance(std::string_view name);

struct PlannedWord {
  std::string word;
  std::string recording;

  friend bool operator==(const PlannedWord&, const PlannedWord&) = default;
};

// An ordered sequence of recorded words to be joined into one utterance.
struct SentencePlan {
  std::vector<PlannedWord> words;
  Provenance provenance = Provenance::manual;
  std::optional<std::uint64_t> seed;        // set iff provenance == random
  std::optional<std::string> source_text;   // original sentence for manual/llm

  // Words joined by single spaces.
  std::string text() const;

  nlohmann::json to_json() const;
  // Throws ParseError on missing fields or a seed/provenance mismatch.
  static SentencePlan from_json(const nlohmann::json& j);

  friend bool operator==(const SentencePlan&, const SentencePlan&) = default;
};

// Lowercases, strips .,!?;:"() and splits on whitespace. Every token must be
// in the inventory; otherwise throws OovSentenceError listing all missing
// tokens in sentence order. Throws DataError if no tokens remain.
SentencePlan plan_from_sentence(std::string_view sentence, const WordInventory& inventory,
                                Provenance provenance);

// m i.i.d. uniform draws (with replacement) over the inventory's distinct
// words. Deterministic for a given (inventory, m, seed).
SentencePlan plan_random(const WordInventory& inventory, std::size_t m, std::uint64_t seed);

struct RejectedSentence {
  std::string sentence;
  std::vector<std::string> missing;  // empty when the sentence had no tokens
  std::string reason;

  nlohmann::json to_json() const;
};

struct PlanBatch {
  std::vector<SentencePlan> accepted;
  std::vector<RejectedSentence> rejected;
};

// plan_from_sentence over every sentence; rejected sentences are collected
// rather than thrown.
PlanBatch batch_plans(std::span<const std::string> sentences, const WordInventory& inventory,
                      Provenance provenance);

}  // namespace corpusforge
