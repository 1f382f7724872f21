#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corpusforge {

// A lexicon-native phoneme symbol (typically IPA). Never contains whitespace.
using Phoneme = std::string;

// Ordered pair of consecutive phonemes within one word.
using Biphone = std::pair<Phoneme, Phoneme>;
using BiphoneSet = std::set<Biphone>;

// Non-empty pronunciation of one word.
class PhonemeSequence {
 public:
  // Throws DataError if `phonemes` is empty or any symbol is empty or
  // contains whitespace.
  explicit PhonemeSequence(std::vector<Phoneme> phonemes);

  const std::vector<Phoneme>& phonemes() const noexcept { return phonemes_; }
  std::size_t size() const noexcept { return phonemes_.size(); }
  const Phoneme& operator[](std::size_t i) const { return phonemes_[i]; }
  auto begin() const noexcept { return phonemes_.begin(); }
  auto end() const noexcept { return phonemes_.end(); }

  // Distinct phonemes, P(w) in set form.
  std::set<Phoneme> distinct() const;

  // Space-separated symbols, the lexicon file representation.
  std::string str() const;

  friend bool operator==(const PhonemeSequence&, const PhonemeSequence&) = default;

 private:
  std::vector<Phoneme> phonemes_;
};

// Word-internal consecutive pairs; empty for a single-phoneme word.
BiphoneSet biphones(const PhonemeSequence& seq);

// Pronunciation lexicon keyed by normalized orthography (NFC, lowercase,
// trimmed). One pronunciation per word.
//
// File format, one entry per line:
//   word<TAB>ph ph ph
// Lines whose first non-blank character is '#' and blank lines are skipped.
class Lexicon {
 public:
  Lexicon() = default;

  // Throws ParseError with the source name and line number on malformed
  // lines, empty phoneme tokens, or duplicate normalized words.
  static Lexicon parse(std::istream& in, std::string_view source_name = "<input>");
  static Lexicon parse_string(std::string_view content, std::string_view source_name = "<input>");
  static Lexicon load(const std::filesystem::path& path);

  // Lookup after normalization. Throws OovError carrying the normalized form.
  const PhonemeSequence& phonemize(std::string_view word) const;

  // nullptr when absent.
  const PhonemeSequence* find(std::string_view word) const;

  // Throws DataError if the normalized key already exists.
  void insert(std::string_view word, PhonemeSequence pronunciation);

  void serialize(std::ostream& out) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::string, PhonemeSequence>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, PhonemeSequence> entries_;
};

}  // namespace corpusforge
