#pragma once

#include <string>
#include <vector>

#include "corpusforge/selector.hpp"
#include "oracles.hpp"

namespace testing_support {

inline corpusforge::Candidate candidate(const std::string& word, std::vector<std::string> phones) {
  return corpusforge::Candidate(word, corpusforge::PhonemeSequence(std::move(phones)));
}

inline corpusforge::CandidatePool to_pool(const std::vector<oracle::Word>& words) {
  std::vector<corpusforge::Candidate> out;
  for (const auto& w : words) out.push_back(candidate(w.name, w.phones));
  return corpusforge::CandidatePool(std::move(out));
}

}  // namespace testing_support
