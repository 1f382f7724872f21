#pragma once

// Independent reference implementations used only by tests. None of these
// call into the code paths they check; they follow the textbook definitions
// directly and favour clarity over speed.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Phone = std::string;
using Pair = std::pair<Phone, Phone>;

struct Word {
  std::string name;
  std::vector<Phone> phones;
};

inline std::set<Pair> consecutive_pairs(const std::vector<Phone>& phones) {
  std::set<Pair> out;
  for (std::size_t i = 0; i + 1 < phones.size(); ++i) out.insert({phones[i], phones[i + 1]});
  return out;
}

inline std::size_t union_size(const std::vector<Word>& words) {
  std::set<Pair> all;
  for (const auto& w : words) {
    auto p = consecutive_pairs(w.phones);
    all.insert(p.begin(), p.end());
  }
  return all.size();
}

// Plain greedy: every step rescans all words and recomputes the union from
// the chosen list. Words must be given in canonical (sorted) order.
inline std::vector<std::string> greedy_cover(const std::vector<Word>& words, std::size_t k) {
  std::vector<Word> chosen;
  std::vector<bool> used(words.size(), false);
  while (chosen.size() < k) {
    const std::size_t base = union_size(chosen);
    std::size_t best = words.size();
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (used[i]) continue;
      auto trial = chosen;
      trial.push_back(words[i]);
      const std::size_t gain = union_size(trial) - base;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == words.size()) break;
    used[best] = true;
    chosen.push_back(words[best]);
  }
  std::vector<std::string> names;
  for (const auto& w : chosen) names.push_back(w.name);
  return names;
}

// Best union size over all subsets of size <= k, by bitmask enumeration.
inline std::size_t optimum_cover(const std::vector<Word>& words, std::size_t k) {
  std::size_t best = 0;
  const std::uint32_t n = static_cast<std::uint32_t>(words.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
    std::vector<Word> subset;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(words[i]);
    best = std::max(best, union_size(subset));
  }
  return best;
}

// Straight-line evaluation of the weighted phoneme score over the remaining
// words, one step at a time. Distinct phonemes are visited in lexicographic
// order (std::set), counts are token occurrences among previous picks.
inline std::vector<std::string> weighted_phoneme_picks(const std::vector<Word>& words,
                                                       std::size_t k,
                                                       const std::map<Phone, double>& alpha) {
  std::map<Phone, std::uint64_t> count;
  std::vector<bool> used(words.size(), false);
  std::vector<std::string> picks;
  const std::size_t steps = std::min(k, words.size());
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t best = words.size();
    double best_score = -1.0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (used[i]) continue;
      const std::set<Phone> distinct(words[i].phones.begin(), words[i].phones.end());
      double score = 0.0;
      for (const auto& p : distinct) {
        auto a = alpha.find(p);
        if (a == alpha.end()) continue;
        score += a->second / (static_cast<double>(count[p]) + 1.0);
      }
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    used[best] = true;
    for (const auto& p : words[best].phones) ++count[p];
    picks.push_back(words[best].name);
  }
  return picks;
}

// Levenshtein distance straight from the recursive definition, memoized on
// (i, j) suffix positions.
inline std::size_t edit_distance(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> d = [&](std::size_t i, std::size_t j) {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t best;
    if (a[i] == b[j]) {
      best = d(i + 1, j + 1);
    } else {
      best = 1 + std::min({d(i + 1, j + 1), d(i + 1, j), d(i, j + 1)});
    }
    memo[key] = best;
    return best;
  };
  return d(0, 0);
}

// Random phoneme words over a small alphabet. Names are w00, w01, ... so
// generation order is canonical order.
inline std::vector<Word> random_words(std::mt19937_64& rng, std::size_t count,
                                      std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) {
    Word w;
    w.name = (i < 10 ? "w0" : "w") + std::to_string(i);
    const std::size_t len = 1 + rng() % max_len;
    for (std::size_t j = 0; j < len; ++j) w.phones.push_back(std::string(1, char('a' + rng() % alphabet)));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace oracle
