#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace corpusforge {

// One recorded clip. `word` holds the normalized orthography.
struct RecordingEntry {
  std::string speaker_id;
  std::string session_id;
  std::string block_id;
  std::string microphone_id;
  std::string word;
  std::uint64_t repetition_index = 0;
  std::string audio_path;
  std::string transcript;
};

// Recordings in file order. The tuple (speaker, session, block, microphone,
// word, repetition) is unique.
class RecordingManifest {
 public:
  RecordingManifest() = default;

  // Throws DataError on duplicate keys, naming both rows (1-based, header
  // excluded).
  explicit RecordingManifest(std::vector<RecordingEntry> entries);

  const std::vector<RecordingEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const RecordingEntry& operator[](std::size_t i) const { return entries_[i]; }

  // Non-fatal observations from loading, e.g. ignored columns.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  std::vector<RecordingEntry> entries_;
  std::vector<std::string> warnings_;
};

inline constexpr std::string_view kManifestColumns[] = {
    "speaker_id", "session_id", "block_id", "microphone_id",
    "word",       "repetition_index", "audio_path", "transcript"};

// CSV (RFC 4180 quoting) with the header above, or JSONL objects with the
// same fields. Format is chosen by extension: .jsonl/.json or anything else
// as CSV. Unknown columns are ignored with a warning.
RecordingManifest load_manifest(const std::filesystem::path& path);
RecordingManifest parse_manifest_csv(std::istream& in, std::string_view source_name = "<csv>");
RecordingManifest parse_manifest_jsonl(std::istream& in, std::string_view source_name = "<jsonl>");

enum class SplitPolicy { strict, mixed, natural };
enum class Side { train, test };

std::string_view to_string(SplitPolicy p) noexcept;
std::string_view to_string(Side s) noexcept;
SplitPolicy parse_split_policy(std::string_view name);

using GroupKey = std::vector<std::string>;

// strict: (word); mixed: (speaker, session, block);
// natural: (speaker, session, block, word).
GroupKey group_key(const RecordingEntry& e, SplitPolicy policy);

struct SplitAssignment {
  SplitPolicy policy = SplitPolicy::natural;
  std::uint64_t seed = 0;
  double train_ratio = 0.8;
  std::map<std::size_t, Side> labels;  // entry index -> side
  std::map<GroupKey, Side> group_key_audit;

  // One JSON object per entry: {"entry_id", "side", "group", "audio_path"}.
  void write_jsonl(std::ostream& out, const RecordingManifest& manifest) const;
};

// Groups entries by the policy key, shuffles the groups (seeded Fisher-Yates
// over canonical key order) and fills train until the train entry count first
// reaches train_ratio * total; the rest go to test. If test would be empty,
// the smallest train group moves to test.
// Throws UsageError on an empty manifest or ratio outside (0, 1), DataError
// when the manifest forms a single group.
SplitAssignment split(const RecordingManifest& manifest, SplitPolicy policy, double train_ratio,
                      std::uint64_t seed);

struct LeakageAudit {
  std::size_t vocabulary_overlap = 0;   // words present on both sides
  std::size_t spanning_group_keys = 0;  // policy groups present on both sides
  std::size_t train_entries = 0;
  std::size_t test_entries = 0;
  double realized_train_ratio = 0.0;

  nlohmann::json to_json() const;
};

// Recomputes groups from the manifest and the per-entry labels. Throws
// DataError if any entry is unlabeled or a label refers to no entry.
LeakageAudit audit_leakage(const RecordingManifest& manifest, const SplitAssignment& assignment);

}  // namespace corpusforge
