#include "corpusforge/audio.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <set>

#include "corpusforge/error.hpp"
#include "corpusforge/rechain.hpp"

namespace corpusforge {
namespace {

std::uint16_t le16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_tag(std::vector<std::uint8_t>& out, const char (&tag)[5]) {
  out.insert(out.end(), tag, tag + 4);
}

void unsupported(const std::string& src, const std::string& field, std::uint32_t value,
                 const std::string& expected) {
  throw UnsupportedFormatError(field, src + ": unsupported WAV " + field + " " +
                                          std::to_string(value) + " (expected " + expected + ")");
}

}  // namespace

AudioClip parse_wav(std::span<const std::uint8_t> bytes, const std::string& src) {
  if (bytes.size() < 12) throw ParseError(src + ": truncated RIFF header");
  if (std::memcmp(bytes.data(), "RIFF", 4) != 0 || std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw ParseError(src + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint32_t rate = 0;
  std::size_t pos = 12;
  while (true) {
    if (pos + 8 > bytes.size()) {
      throw ParseError(src + (have_fmt ? ": missing data chunk" : ": missing fmt chunk"));
    }
    const std::uint8_t* hdr = bytes.data() + pos;
    const std::uint32_t size = le32(hdr + 4);
    const std::size_t body = pos + 8;

    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (size < 16 || body + size > bytes.size()) throw ParseError(src + ": truncated fmt chunk");
      const std::uint8_t* f = bytes.data() + body;
      const std::uint16_t format = le16(f);
      const std::uint16_t channels = le16(f + 2);
      rate = le32(f + 4);
      const std::uint16_t bits = le16(f + 14);
      if (format != 1) unsupported(src, "audio_format", format, "1 (PCM)");
      if (channels != 1) unsupported(src, "num_channels", channels, "1");
      if (bits != 16) unsupported(src, "bits_per_sample", bits, "16");
      if (rate == 0) unsupported(src, "sample_rate", rate, "a positive rate");
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      if (!have_fmt) throw ParseError(src + ": data chunk before fmt chunk");
      if (body + size > bytes.size())
        throw ParseError(src + ": truncated data chunk (declared " + std::to_string(size) +
                         " bytes, " + std::to_string(bytes.size() - body) + " present)");
      if (size % 2 != 0) throw ParseError(src + ": odd data size for 16-bit samples");
      AudioClip clip;
      clip.sample_rate = rate;
      clip.source_path = src;
      clip.samples.resize(size / 2);
      for (std::size_t i = 0; i < clip.samples.size(); ++i)
        clip.samples[i] = static_cast<std::int16_t>(le16(bytes.data() + body + 2 * i));
      return clip;
    }
    pos = body + size + (size & 1);  // chunks are word aligned
  }
}

AudioClip read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open WAV file '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_wav(bytes, path.string());
}

std::vector<std::uint8_t> encode_wav(const AudioClip& clip) {
  const auto data_bytes = static_cast<std::uint32_t>(clip.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put32(out, 36 + data_bytes);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, 16);
  put16(out, 1);  // PCM
  put16(out, 1);  // mono
  put32(out, clip.sample_rate);
  put32(out, clip.sample_rate * 2);  // byte rate
  put16(out, 2);                     // block align
  put16(out, 16);
  put_tag(out, "data");
  put32(out, data_bytes);
  for (auto s : clip.samples) put16(out, static_cast<std::uint16_t>(s));
  return out;
}

void write_wav(const AudioClip& clip, const std::filesystem::path& path) {
  const auto bytes = encode_wav(clip);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write WAV file '" + path.string() + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw UsageError("write failed for '" + path.string() + "'");
}

std::uint64_t ms_to_samples(std::uint32_t ms, std::uint32_t sample_rate) {
  return (static_cast<std::uint64_t>(ms) * sample_rate + 500) / 1000;
}

AudioClip concat(std::span<const AudioClip> clips, const ConcatSpec& spec) {
  if (clips.empty()) throw DataError("nothing to concatenate");

  std::set<std::uint32_t> rates;
  for (const auto& c : clips) rates.insert(c.sample_rate);
  if (rates.size() > 1) {
    std::string list;
    for (auto r : rates) list += (list.empty() ? "" : ", ") + std::to_string(r);
    throw DataError("clips have mixed sample rates: " + list + " Hz (no resampling is done)");
  }
  const std::uint32_t rate = *rates.begin();

  const std::uint64_t gap = ms_to_samples(spec.gap_ms, rate);
  const std::uint64_t fade = ms_to_samples(spec.fade_ms, rate);
  if (fade > 0) {
    const auto shortest = std::min_element(clips.begin(), clips.end(), [](auto& a, auto& b) {
                            return a.samples.size() < b.samples.size();
                          })->samples.size();
    if (2 * fade > shortest)
      throw DataError("fade of " + std::to_string(fade) + " samples exceeds half of the shortest clip (" +
                      std::to_string(shortest) + " samples)");
  }

  std::uint64_t total = gap * (clips.size() - 1);
  for (const auto& c : clips) total += c.samples.size();

  AudioClip out;
  out.sample_rate = rate;
  out.samples.reserve(total);
  for (std::size_t i = 0; i < clips.size(); ++i) {
    if (i) out.samples.insert(out.samples.end(), gap, 0);
    const auto start = out.samples.size();
    out.samples.insert(out.samples.end(), clips[i].samples.begin(), clips[i].samples.end());
    if (fade == 0) continue;
    auto* s = out.samples.data() + start;
    const auto n = clips[i].samples.size();
    for (std::uint64_t j = 0; j < fade; ++j) {
      // gain j / fade on both edges, rounded toward zero
      const auto g = static_cast<std::int64_t>(j);
      const auto d = static_cast<std::int64_t>(fade);
      s[j] = static_cast<std::int16_t>(s[j] * g / d);
      s[n - 1 - j] = static_cast<std::int16_t>(s[n - 1 - j] * g / d);
    }
  }
  return out;
}

AudioClip concat(const SentencePlan& plan, std::span<const AudioClip> clips,
                 const ConcatSpec& spec) {
  if (clips.size() != plan.words.size())
    throw DataError("plan has " + std::to_string(plan.words.size()) + " words but " +
                    std::to_string(clips.size()) + " clips were supplied");
  return concat(clips, spec);
}

}  // namespace corpusforge
