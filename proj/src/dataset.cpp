#include "corpusforge/dataset.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <tuple>

#include "corpusforge/error.hpp"
#include "corpusforge/random.hpp"
#include "corpusforge/text.hpp"

namespace corpusforge {
namespace {

using EntryKey = std::tuple<std::string, std::string, std::string, std::string, std::string,
                            std::uint64_t>;

EntryKey entry_key(const RecordingEntry& e) {
  return {e.speaker_id, e.session_id, e.block_id, e.microphone_id, e.word, e.repetition_index};
}

// Reads one RFC 4180 record. Returns false at end of input.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields, std::size_t& lineno) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  ++lineno;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  char c;
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++lineno;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted field at line " + std::to_string(lineno));
  fields.push_back(std::move(field));
  return true;
}

std::uint64_t parse_repetition(std::string_view s, const std::string& where) {
  s = text::trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(where + ": repetition_index must be a non-negative integer, got '" +
                     std::string(s) + "'");
  return v;
}

RecordingEntry make_entry(const std::array<std::string, 8>& f, const std::string& where) {
  RecordingEntry e;
  e.speaker_id = f[0];
  e.session_id = f[1];
  e.block_id = f[2];
  e.microphone_id = f[3];
  try {
    e.word = text::normalize_word(f[4]);
  } catch (const DataError& err) {
    throw ParseError(where + ": " + err.what());
  }
  if (e.word.empty()) throw ParseError(where + ": empty word");
  e.repetition_index = parse_repetition(f[5], where);
  e.audio_path = f[6];
  e.transcript = f[7];
  return e;
}

}  // namespace

RecordingManifest::RecordingManifest(std::vector<RecordingEntry> entries)
    : entries_(std::move(entries)) {
  std::map<EntryKey, std::size_t> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto [it, inserted] = seen.emplace(entry_key(entries_[i]), i);
    if (!inserted)
      throw DataError("duplicate recording key in rows " + std::to_string(it->second + 1) +
                      " and " + std::to_string(i + 1) + " (speaker " + entries_[i].speaker_id +
                      ", session " + entries_[i].session_id + ", block " +
                      entries_[i].block_id + ", mic " + entries_[i].microphone_id + ", word '" +
                      entries_[i].word + "', repetition " +
                      std::to_string(entries_[i].repetition_index) + ")");
  }
}

RecordingManifest parse_manifest_csv(std::istream& in, std::string_view source_name) {
  const std::string src(source_name);
  std::vector<std::string> header;
  std::size_t lineno = 0;
  if (!read_csv_record(in, header, lineno)) throw ParseError(src + ": empty manifest");
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) header[0].erase(0, 3);

  std::array<std::optional<std::size_t>, 8> column;
  std::vector<std::string> ignored;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name(text::trim(header[i]));
    auto it = std::find(std::begin(kManifestColumns), std::end(kManifestColumns), name);
    if (it == std::end(kManifestColumns)) {
      ignored.push_back(name);
      continue;
    }
    auto& slot = column[static_cast<std::size_t>(it - std::begin(kManifestColumns))];
    if (slot) throw ParseError(src + ": column '" + name + "' appears twice in header");
    slot = i;
  }
  for (std::size_t c = 0; c < column.size(); ++c)
    if (!column[c])
      throw ParseError(src + ": missing column '" + std::string(kManifestColumns[c]) + "'");

  std::vector<RecordingEntry> entries;
  std::vector<std::string> fields;
  std::size_t row = 0;
  while (read_csv_record(in, fields, lineno)) {
    if (fields.size() == 1 && text::trim(fields[0]).empty()) continue;
    ++row;
    const std::string where = src + ": row " + std::to_string(row) + " (line " +
                              std::to_string(lineno) + ")";
    if (fields.size() != header.size())
      throw ParseError(where + ": expected " + std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    std::array<std::string, 8> f;
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = fields[*column[c]];
    entries.push_back(make_entry(f, where));
  }

  RecordingManifest m(std::move(entries));
  for (const auto& name : ignored) m.add_warning("ignoring unknown column '" + name + "'");
  return m;
}

RecordingManifest parse_manifest_jsonl(std::istream& in, std::string_view source_name) {
  const std::string src(source_name);
  std::vector<RecordingEntry> entries;
  std::set<std::string> ignored;
  std::string line;
  std::size_t lineno = 0;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (text::trim(line).empty()) continue;
    ++row;
    const std::string where = src + ": row " + std::to_string(row) + " (line " +
                              std::to_string(lineno) + ")";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");

    std::array<std::string, 8> f;
    for (std::size_t c = 0; c < f.size(); ++c) {
      const std::string name(kManifestColumns[c]);
      auto it = j.find(name);
      if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
      if (it->is_string()) {
        f[c] = it->get<std::string>();
      } else if (it->is_number_unsigned() || it->is_number_integer()) {
        f[c] = it->dump();
      } else {
        throw ParseError(where + ": field '" + name + "' must be a string or integer");
      }
    }
    for (const auto& [key, _] : j.items()) {
      if (std::find(std::begin(kManifestColumns), std::end(kManifestColumns), key) ==
          std::end(kManifestColumns))
        ignored.insert(key);
    }
    entries.push_back(make_entry(f, where));
  }

  RecordingManifest m(std::move(entries));
  for (const auto& name : ignored) m.add_warning("ignoring unknown field '" + name + "'");
  return m;
}

RecordingManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open manifest '" + path.string() + "'");
  const auto ext = path.extension().string();
  if (ext == ".jsonl" || ext == ".json") return parse_manifest_jsonl(in, path.string());
  return parse_manifest_csv(in, path.string());
}

// ---------------------------------------------------------------------------
// Splitting

std::string_view to_string(SplitPolicy p) noexcept {
  switch (p) {
    case SplitPolicy::strict: return "strict";
    case SplitPolicy::mixed: return "mixed";
    case SplitPolicy::natural: return "natural";
  }
  return "?";
}

std::string_view to_string(Side s) noexcept { return s == Side::train ? "train" : "test"; }

SplitPolicy parse_split_policy(std::string_view name) {
  if (name == "strict") return SplitPolicy::strict;
  if (name == "mixed") return SplitPolicy::mixed;
  if (name == "natural") return SplitPolicy::natural;
  throw UsageError("unknown split policy '" + std::string(name) +
                   "' (expected strict, mixed or natural)");
}

GroupKey group_key(const RecordingEntry& e, SplitPolicy policy) {
  switch (policy) {
    case SplitPolicy::strict: return {e.word};
    case SplitPolicy::mixed: return {e.speaker_id, e.session_id, e.block_id};
    case SplitPolicy::natural: return {e.speaker_id, e.session_id, e.block_id, e.word};
  }
  return {};
}

SplitAssignment split(const RecordingManifest& manifest, SplitPolicy policy, double train_ratio,
                      std::uint64_t seed) {
  if (manifest.empty()) throw UsageError("cannot split an empty manifest");
  if (!(train_ratio > 0.0 && train_ratio < 1.0))
    throw UsageError("train ratio must lie strictly between 0 and 1, got " +
                     std::to_string(train_ratio));

  // std::map iteration gives the canonical key order.
  std::map<GroupKey, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < manifest.size(); ++i)
    by_key[group_key(manifest[i], policy)].push_back(i);
  if (by_key.size() < 2)
    throw DataError("manifest forms a single " + std::string(to_string(policy)) +
                    " group; cannot produce non-empty train and test sides");

  std::vector<const std::pair<const GroupKey, std::vector<std::size_t>>*> groups;
  for (const auto& g : by_key) groups.push_back(&g);

  Rng rng(seed);
  for (std::size_t i = groups.size() - 1; i > 0; --i)
    std::swap(groups[i], groups[uniform_index(rng, i + 1)]);

  const double target = train_ratio * static_cast<double>(manifest.size());
  std::vector<Side> side(groups.size(), Side::test);
  std::size_t train_count = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (static_cast<double>(train_count) >= target) break;
    side[g] = Side::train;
    train_count += groups[g]->second.size();
  }
  if (train_count == manifest.size()) {
    // Smallest group moves; the later one in shuffled order on size ties.
    std::size_t smallest = 0;
    for (std::size_t g = 1; g < groups.size(); ++g)
      if (groups[g]->second.size() <= groups[smallest]->second.size()) smallest = g;
    side[smallest] = Side::test;
  }

  SplitAssignment out;
  out.policy = policy;
  out.seed = seed;
  out.train_ratio = train_ratio;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out.group_key_audit.emplace(groups[g]->first, side[g]);
    for (auto idx : groups[g]->second) out.labels.emplace(idx, side[g]);
  }
  return out;
}

void SplitAssignment::write_jsonl(std::ostream& out, const RecordingManifest& manifest) const {
  for (const auto& [idx, s] : labels) {
    nlohmann::json j = {
        {"entry_id", idx},
        {"side", to_string(s)},
        {"group", group_key(manifest[idx], policy)},
        {"audio_path", manifest[idx].audio_path},
    };
    out << j.dump() << '\n';
  }
}

LeakageAudit audit_leakage(const RecordingManifest& manifest, const SplitAssignment& assignment) {
  for (std::size_t i = 0; i < manifest.size(); ++i)
    if (!assignment.labels.contains(i))
      throw DataError("split assignment does not cover entry " + std::to_string(i) + " (" +
                      manifest[i].audio_path + ")");
  if (!assignment.labels.empty() && assignment.labels.rbegin()->first >= manifest.size())
    throw DataError("split assignment labels entry " +
                    std::to_string(assignment.labels.rbegin()->first) +
                    ", which is not in the manifest");

  LeakageAudit a;
  std::map<GroupKey, std::set<Side>> group_sides;
  std::map<std::string, std::set<Side>> word_sides;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const Side s = assignment.labels.at(i);
    (s == Side::train ? a.train_entries : a.test_entries)++;
    group_sides[group_key(manifest[i], assignment.policy)].insert(s);
    word_sides[manifest[i].word].insert(s);
  }
  for (const auto& [_, sides] : group_sides) a.spanning_group_keys += sides.size() > 1;
  for (const auto& [_, sides] : word_sides) a.vocabulary_overlap += sides.size() > 1;
  a.realized_train_ratio =
      manifest.empty() ? 0.0
                       : static_cast<double>(a.train_entries) / static_cast<double>(manifest.size());
  return a;
}

nlohmann::json LeakageAudit::to_json() const {
  return {
      {"vocabulary_overlap", vocabulary_overlap},
      {"spanning_group_keys", spanning_group_keys},
      {"train_entries", train_entries},
      {"test_entries", test_entries},
      {"realized_train_ratio", realized_train_ratio},
  };
}

}  // namespace corpusforge
