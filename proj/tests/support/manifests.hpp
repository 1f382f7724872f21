#pragma once

#include <random>
#include <string>
#include <vector>

#include "corpusforge/dataset.hpp"

namespace testing_support {

// Multi-microphone word manifest: every speaker/session/block records every word
// once per microphone.
inline corpusforge::RecordingManifest random_manifest(std::mt19937_64& rng) {
  const auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
  const int speakers = pick(2, 5);
  const int sessions = pick(1, 3);
  const int blocks = pick(2, 4);
  const int words = pick(5, 30);
  const int mics = pick(1, 7);
  std::vector<corpusforge::RecordingEntry> entries;
  for (int s = 0; s < speakers; ++s)
    for (int se = 0; se < sessions; ++se)
      for (int b = 0; b < blocks; ++b)
        for (int w = 0; w < words; ++w)
          for (int m = 0; m < mics; ++m) {
            corpusforge::RecordingEntry e;
            e.speaker_id = "S" + std::to_string(s);
            e.session_id = "sess" + std::to_string(se);
            e.block_id = "B" + std::to_string(b + 1);
            e.microphone_id = "M" + std::to_string(m + 1);
            e.word = "word" + std::to_string(w);
            e.repetition_index = 0;
            e.audio_path = e.speaker_id + "/" + e.session_id + "/" + e.block_id + "_" + e.word +
                           "_" + e.microphone_id + ".wav";
            e.transcript = e.word;
            entries.push_back(std::move(e));
          }
  return corpusforge::RecordingManifest(std::move(entries));
}

}  // namespace testing_support
