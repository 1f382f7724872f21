#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpusforge/lexicon.hpp"
#include "json.hpp"

namespace corpusforge {

// One selectable word with its pronunciation and word-internal biphones.
struct Candidate {
  Candidate(std::string word, PhonemeSequence phonemes);

  std::string word;  // normalized orthography
  PhonemeSequence phonemes;
  BiphoneSet biphone_set;
};

// Candidate words in canonical order: lexicographic by normalized orthography.
// Tie-breaking in both selection algorithms refers to this order.
class CandidatePool {
 public:
  CandidatePool() = default;

  // Sorts into canonical order; throws DataError on duplicate orthography.
  explicit CandidatePool(std::vector<Candidate> words);

  // Builds a pool from a word list. Duplicate words (after normalization) are
  // collapsed; words missing from the lexicon are skipped and, if `oov` is
  // given, appended to it.
  static CandidatePool from_words(const Lexicon& lexicon, std::span<const std::string> words,
                                  std::vector<std::string>* oov = nullptr);
  static CandidatePool from_lexicon(const Lexicon& lexicon);

  // Pool minus the given (normalized) words.
  CandidatePool without(std::span<const std::string> words) const;

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  const Candidate& operator[](std::size_t i) const { return words_[i]; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  std::optional<std::size_t> index_of(std::string_view word) const;

 private:
  std::vector<Candidate> words_;
};

// Target phonemes P_t with positive weights alpha_p.
class PhonemeWeights {
 public:
  // Throws DataError if empty or any weight is not a finite positive number.
  explicit PhonemeWeights(std::map<Phoneme, double> weights);

  // Accepts a flat JSON object {"s": 2.0, "r": 1.0}.
  static PhonemeWeights from_json(const nlohmann::json& j);
  static PhonemeWeights load(const std::filesystem::path& path);

  const std::map<Phoneme, double>& weights() const noexcept { return weights_; }
  std::optional<double> alpha(const Phoneme& p) const;

 private:
  std::map<Phoneme, double> weights_;
};

// Ordered selection plus the bookkeeping both greedy stages need.
//   covered_biphones  = union of B(w) over selected words
//   phoneme_counts[p] = occurrences of p over all phoneme tokens of selected words
//   step_gain[i]      = biphones newly covered by the i-th selected word
class SelectionState {
 public:
  explicit SelectionState(std::size_t budget = 1) : budget_(budget) {}

  // Rebuilds a state from an ordered selection alone.
  static SelectionState replay(std::span<const Candidate> selected, std::size_t budget);

  // Appends `c`. Throws DataError if the budget is exhausted or the word is
  // already selected.
  void add(const Candidate& c);

  bool full() const noexcept { return selected_.size() >= budget_; }
  bool contains(std::string_view word) const;
  std::vector<std::string> words() const;

  const std::vector<Candidate>& selected() const noexcept { return selected_; }
  const BiphoneSet& covered_biphones() const noexcept { return covered_; }
  const std::map<Phoneme, std::uint64_t>& phoneme_counts() const noexcept { return counts_; }
  const std::vector<std::size_t>& step_gain() const noexcept { return step_gain_; }
  std::size_t budget() const noexcept { return budget_; }
  std::size_t size() const noexcept { return selected_.size(); }

 private:
  std::size_t budget_;
  std::vector<Candidate> selected_;
  BiphoneSet covered_;
  std::map<Phoneme, std::uint64_t> counts_;
  std::vector<std::size_t> step_gain_;
};

// Selection of `first` followed by `second`, recomputed from scratch.
SelectionState concatenate(const SelectionState& first, const SelectionState& second);

// Greedy Biphone Coverage. Each step adds the word covering the most
// not-yet-covered biphones, first in canonical order on ties. Stops after k
// words or as soon as no remaining word adds a new biphone.
// Throws DataError on an empty pool and UsageError when k == 0.
SelectionState gbc_select(const CandidatePool& pool, std::size_t k);

struct PwpsOptions {
  // When set, c(S', p) starts from the prior state's phoneme counts instead of
  // zero.
  bool seed_counts_from_prior = false;
};

// Personalized Weighted Phoneme Selection over `pool` (which must not contain
// any word of `prior`). Each step picks the word maximizing
//
//   score(w) = sum over distinct p in P(w) with p in P_t of alpha_p / (c(p) + 1)
//
// where c counts phoneme tokens among the words picked so far by this call.
// Terms are summed in lexicographic phoneme order. Ties and all-zero fields
// resolve to canonical pool order. Selects min(k_prime, |pool|) words.
SelectionState pwps_select(const CandidatePool& pool, std::size_t k_prime,
                           const PhonemeWeights& weights, const SelectionState& prior,
                           PwpsOptions options = {});

struct MaxCoverage {
  std::vector<std::string> words;  // canonical order
  std::size_t coverage = 0;
};

inline constexpr std::size_t kBruteForceMaxPool = 20;

// Exhaustive optimum of |union B(w)| over subsets of size <= k. Among optimal
// subsets, returns the lexicographically smallest sequence of canonical
// indices (so a subset beats any of its supersets).
// Throws UsageError for pools larger than kBruteForceMaxPool.
MaxCoverage brute_force_max_coverage(const CandidatePool& pool, std::size_t k);

struct CoverageReport {
  std::size_t word_count = 0;
  std::size_t distinct_biphones = 0;
  std::map<Phoneme, std::uint64_t> phoneme_histogram;
  std::vector<std::size_t> per_step_gain;

  nlohmann::json to_json() const;
};

CoverageReport coverage_report(const SelectionState& state);

}  // namespace corpusforge
