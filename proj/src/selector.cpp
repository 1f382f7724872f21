#include "corpusforge/selector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>

#include "corpusforge/error.hpp"
#include "corpusforge/text.hpp"

namespace corpusforge {

Candidate::Candidate(std::string w, PhonemeSequence p)
    : word(std::move(w)), phonemes(std::move(p)), biphone_set(biphones(phonemes)) {}

// ---------------------------------------------------------------------------
// CandidatePool

CandidatePool::CandidatePool(std::vector<Candidate> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end(),
            [](const Candidate& a, const Candidate& b) { return a.word < b.word; });
  for (std::size_t i = 1; i < words_.size(); ++i) {
    if (words_[i].word == words_[i - 1].word)
      throw DataError("duplicate candidate word '" + words_[i].word + "'");
  }
}

CandidatePool CandidatePool::from_words(const Lexicon& lexicon, std::span<const std::string> words,
                                        std::vector<std::string>* oov) {
  std::set<std::string> seen;
  std::vector<Candidate> out;
  for (const auto& raw : words) {
    std::string w = text::normalize_word(raw);
    if (w.empty() || !seen.insert(w).second) continue;
    if (const PhonemeSequence* pron = lexicon.find(w)) {
      out.emplace_back(std::move(w), *pron);
    } else if (oov) {
      oov->push_back(std::move(w));
    }
  }
  return CandidatePool(std::move(out));
}

CandidatePool CandidatePool::from_lexicon(const Lexicon& lexicon) {
  std::vector<Candidate> out;
  out.reserve(lexicon.size());
  for (const auto& [word, pron] : lexicon.entries()) out.emplace_back(word, pron);
  return CandidatePool(std::move(out));
}

CandidatePool CandidatePool::without(std::span<const std::string> words) const {
  const std::set<std::string> drop(words.begin(), words.end());
  std::vector<Candidate> out;
  for (const auto& c : words_)
    if (!drop.contains(c.word)) out.push_back(c);
  return CandidatePool(std::move(out));
}

std::optional<std::size_t> CandidatePool::index_of(std::string_view word) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), word,
                             [](const Candidate& c, std::string_view w) { return c.word < w; });
  if (it == words_.end() || it->word != word) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

// ---------------------------------------------------------------------------
// PhonemeWeights

PhonemeWeights::PhonemeWeights(std::map<Phoneme, double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DataError("phoneme weights: target set is empty");
  for (const auto& [p, a] : weights_) {
    if (p.empty()) throw DataError("phoneme weights: empty phoneme symbol");
    if (!std::isfinite(a) || a <= 0.0)
      throw DataError("phoneme weights: weight for '" + p + "' must be positive, got " +
                      std::to_string(a));
  }
}

PhonemeWeights PhonemeWeights::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DataError("phoneme weights: expected a JSON object");
  std::map<Phoneme, double> w;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number())
      throw DataError("phoneme weights: value for '" + key + "' is not a number");
    w.emplace(key, value.get<double>());
  }
  return PhonemeWeights(std::move(w));
}

PhonemeWeights PhonemeWeights::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open weights file '" + path.string() + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return from_json(j);
}

std::optional<double> PhonemeWeights::alpha(const Phoneme& p) const {
  auto it = weights_.find(p);
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// SelectionState

SelectionState SelectionState::replay(std::span<const Candidate> selected, std::size_t budget) {
  SelectionState s(budget);
  for (const auto& c : selected) s.add(c);
  return s;
}

void SelectionState::add(const Candidate& c) {
  if (full())
    throw DataError("selection budget of " + std::to_string(budget_) + " words exhausted");
  if (contains(c.word)) throw DataError("word '" + c.word + "' is already selected");
  std::size_t gain = 0;
  for (const auto& b : c.biphone_set) gain += covered_.insert(b).second ? 1 : 0;
  for (const auto& p : c.phonemes) ++counts_[p];
  step_gain_.push_back(gain);
  selected_.push_back(c);
}

bool SelectionState::contains(std::string_view word) const {
  return std::any_of(selected_.begin(), selected_.end(),
                     [&](const Candidate& c) { return c.word == word; });
}

std::vector<std::string> SelectionState::words() const {
  std::vector<std::string> out;
  out.reserve(selected_.size());
  for (const auto& c : selected_) out.push_back(c.word);
  return out;
}

SelectionState concatenate(const SelectionState& first, const SelectionState& second) {
  std::vector<Candidate> all = first.selected();
  all.insert(all.end(), second.selected().begin(), second.selected().end());
  return SelectionState::replay(all, std::max<std::size_t>(1, first.budget() + second.budget()));
}

// ---------------------------------------------------------------------------
// GBC

SelectionState gbc_select(const CandidatePool& pool, std::size_t k) {
  if (pool.empty()) throw DataError("GBC: candidate pool is empty");
  if (k == 0) throw UsageError("GBC: budget k must be at least 1");

  // Intern biphones so coverage checks are index lookups.
  std::map<Biphone, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> word_biphones(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (const auto& b : pool[i].biphone_set) {
      auto [it, _] = ids.try_emplace(b, static_cast<std::uint32_t>(ids.size()));
      word_biphones[i].push_back(it->second);
    }
  }
  std::vector<char> covered(ids.size(), 0);

  // Lazy greedy: gains only shrink as coverage grows, so a stale heap key is
  // an upper bound. A popped word whose fresh gain still ranks at or above the
  // next key (gain desc, index asc) is the exact argmax.
  struct Entry {
    std::size_t gain;
    std::size_t index;
  };
  auto ranks_below = [](const Entry& a, const Entry& b) {
    return a.gain != b.gain ? a.gain < b.gain : a.index > b.index;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(ranks_below)> heap(ranks_below);
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!word_biphones[i].empty()) heap.push({word_biphones[i].size(), i});

  SelectionState state(k);
  while (!state.full() && !heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    std::size_t fresh = 0;
    for (auto id : word_biphones[top.index]) fresh += covered[id] ? 0 : 1;
    if (fresh == 0) continue;

    const Entry current{fresh, top.index};
    if (!heap.empty() && ranks_below(current, heap.top())) {
      heap.push(current);
      continue;
    }
    for (auto id : word_biphones[top.index]) covered[id] = 1;
    state.add(pool[top.index]);
  }
  return state;
}

// ---------------------------------------------------------------------------
// PWPS

SelectionState pwps_select(const CandidatePool& pool, std::size_t k_prime,
                           const PhonemeWeights& weights, const SelectionState& prior,
                           PwpsOptions options) {
  if (k_prime == 0) throw UsageError("PWPS: budget k' must be at least 1");
  for (const auto& c : pool) {
    if (prior.contains(c.word))
      throw DataError("PWPS: pool word '" + c.word + "' was already selected by the prior stage");
  }

  // Per target phoneme: weight and running token count.
  const auto& target = weights.weights();
  std::map<Phoneme, std::size_t> target_index;
  std::vector<double> alpha;
  std::vector<std::uint64_t> count;
  for (const auto& [p, a] : target) {
    target_index.emplace(p, alpha.size());
    alpha.push_back(a);
    count.push_back(0);
  }
  if (options.seed_counts_from_prior) {
    for (const auto& [p, n] : prior.phoneme_counts())
      if (auto it = target_index.find(p); it != target_index.end()) count[it->second] = n;
  }

  // For each word: distinct target phonemes (lexicographic) and token
  // multiplicities of target phonemes.
  struct Terms {
    std::vector<std::size_t> distinct;
    std::vector<std::pair<std::size_t, std::uint64_t>> tokens;
  };
  std::vector<Terms> terms(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    std::map<std::size_t, std::uint64_t> mult;
    for (const auto& p : pool[i].phonemes)
      if (auto it = target_index.find(p); it != target_index.end()) ++mult[it->second];
    // target_index order is the lexicographic phoneme order, so iterating the
    // map keys gives the documented summation order.
    for (const auto& [t, n] : mult) {
      terms[i].distinct.push_back(t);
      terms[i].tokens.emplace_back(t, n);
    }
  }

  const std::size_t budget = std::min(k_prime, pool.size());
  SelectionState state(std::max<std::size_t>(1, budget));
  std::vector<char> taken(pool.size(), 0);
  for (std::size_t step = 0; step < budget; ++step) {
    std::size_t best = pool.size();
    double best_score = -1.0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      double score = 0.0;
      for (auto t : terms[i].distinct) score += alpha[t] / (static_cast<double>(count[t]) + 1.0);
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    taken[best] = 1;
    for (const auto& [t, n] : terms[best].tokens) count[t] += n;
    state.add(pool[best]);
  }
  return state;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

struct Search {
  const std::vector<Bits>& masks;
  std::size_t k;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  std::size_t best_cover = 0;

  // Preorder DFS visits index sequences in lexicographic order, so keeping
  // only strict improvements yields the lexicographically smallest optimum.
  void visit(std::size_t start, const Bits& acc) {
    for (std::size_t i = start; i < masks.size(); ++i) {
      Bits next = acc;
      for (std::size_t w = 0; w < next.size(); ++w) next[w] |= masks[i][w];
      current.push_back(i);
      const std::size_t cover = popcount(next);
      if (cover > best_cover) {
        best_cover = cover;
        best = current;
      }
      if (current.size() < k) visit(i + 1, next);
      current.pop_back();
    }
  }
};

}  // namespace

MaxCoverage brute_force_max_coverage(const CandidatePool& pool, std::size_t k) {
  if (pool.size() > kBruteForceMaxPool)
    throw UsageError("brute-force coverage supports at most " +
                     std::to_string(kBruteForceMaxPool) + " words, got " +
                     std::to_string(pool.size()));
  if (k == 0) throw UsageError("brute-force coverage: k must be at least 1");

  std::map<Biphone, std::size_t> ids;
  for (const auto& c : pool)
    for (const auto& b : c.biphone_set) ids.try_emplace(b, ids.size());
  const std::size_t words = (ids.size() + 63) / 64;
  std::vector<Bits> masks(pool.size(), Bits(words, 0));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (const auto& b : pool[i].biphone_set) {
      const auto id = ids.at(b);
      masks[i][id / 64] |= std::uint64_t{1} << (id % 64);
    }

  Search search{masks, k, {}, {}, 0};
  search.visit(0, Bits(words, 0));

  MaxCoverage out;
  out.coverage = search.best_cover;
  for (auto i : search.best) out.words.push_back(pool[i].word);
  return out;
}

// ---------------------------------------------------------------------------
// Reporting

CoverageReport coverage_report(const SelectionState& state) {
  CoverageReport r;
  r.word_count = state.size();
  r.distinct_biphones = state.covered_biphones().size();
  r.phoneme_histogram = state.phoneme_counts();
  r.per_step_gain = state.step_gain();
  return r;
}

nlohmann::json CoverageReport::to_json() const {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [p, n] : phoneme_histogram) hist[p] = n;
  return {
      {"word_count", word_count},
      {"distinct_biphones", distinct_biphones},
      {"phoneme_histogram", hist},
      {"per_step_gain", per_step_gain},
  };
}

}  // namespace corpusforge
