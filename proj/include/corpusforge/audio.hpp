#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace corpusforge {

struct SentencePlan;

// Mono 16-bit PCM.
struct AudioClip {
  std::vector<std::int16_t> samples;
  std::uint32_t sample_rate = 16000;
  std::string source_path;
};

struct ConcatSpec {
  std::uint32_t gap_ms = 150;  // digital silence between words
  std::uint32_t fade_ms = 0;   // linear fade at both edges of every clip
};

// Canonical RIFF/WAVE: PCM (format 1), 16-bit, 1 channel. Chunks other than
// "fmt " and "data" are skipped.
// Throws UsageError if the file cannot be opened, UnsupportedFormatError
// naming the offending header field, ParseError on truncation or a malformed
// header.
AudioClip read_wav(const std::filesystem::path& path);
AudioClip parse_wav(std::span<const std::uint8_t> bytes, const std::string& source_name);

// Throws UsageError when the path is not writable.
void write_wav(const AudioClip& clip, const std::filesystem::path& path);
std::vector<std::uint8_t> encode_wav(const AudioClip& clip);

// round(ms * rate / 1000) in integer arithmetic, halves rounded up.
std::uint64_t ms_to_samples(std::uint32_t ms, std::uint32_t sample_rate);

// Clips in order with gap silence between them. Output length is
// sum(clip lengths) + (n - 1) * ms_to_samples(gap_ms).
// Throws DataError on an empty clip list, mixed sample rates (listing them),
// or a fade longer than half of the shortest clip.
AudioClip concat(std::span<const AudioClip> clips, const ConcatSpec& spec);

// As above; `clips` must be resolved from `plan.words` in order.
AudioClip concat(const SentencePlan& plan, std::span<const AudioClip> clips,
                 const ConcatSpec& spec);

}  // namespace corpusforge
