#include "corpusforge/rechain.hpp"

#include "corpusforge/error.hpp"
#include "corpusforge/random.hpp"
#include "corpusforge/text.hpp"

namespace corpusforge {

void WordInventory::add(std::string_view word, std::string recording) {
  std::string key = text::normalize_word(word);
  if (key.empty()) throw DataError("inventory word must not be empty");
  items_[std::move(key)].push_back(std::move(recording));
}

WordInventory WordInventory::from_manifest(const RecordingManifest& manifest,
                                           std::optional<std::string_view> speaker) {
  WordInventory inv;
  for (const auto& e : manifest.entries()) {
    if (speaker && e.speaker_id != *speaker) continue;
    inv.items_[e.word].push_back(e.audio_path);
  }
  return inv;
}

bool WordInventory::contains(std::string_view normalized_word) const {
  return items_.find(normalized_word) != items_.end();
}

const std::vector<std::string>& WordInventory::recordings(std::string_view normalized_word) const {
  auto it = items_.find(normalized_word);
  if (it == items_.end()) throw OovError(std::string(normalized_word));
  return it->second;
}

const std::string& WordInventory::first_recording(std::string_view normalized_word) const {
  return recordings(normalized_word).front();
}

std::vector<std::string> WordInventory::words() const {
  std::vector<std::string> out;
  out.reserve(items_.size());
  for (const auto& [w, _] : items_) out.push_back(w);
  return out;
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::manual: return "manual";
    case Provenance::llm: return "llm";
    case Provenance::random: return "random";
  }
  return "?";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "manual") return Provenance::manual;
  if (name == "llm") return Provenance::llm;
  if (name == "random") return Provenance::random;
  throw UsageError("unknown provenance '" + std::string(name) + "'");
}

std::string SentencePlan::text() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i].word;
  }
  return out;
}

nlohmann::json SentencePlan::to_json() const {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : words) ws.push_back({{"word", w.word}, {"recording", w.recording}});
  return {
      {"words", ws},
      {"provenance", to_string(provenance)},
      {"seed", seed ? nlohmann::json(*seed) : nlohmann::json(nullptr)},
      {"source_text", source_text ? nlohmann::json(*source_text) : nlohmann::json(nullptr)},
  };
}

SentencePlan SentencePlan::from_json(const nlohmann::json& j) {
  try {
    SentencePlan p;
    p.provenance = parse_provenance(j.at("provenance").get<std::string>());
    for (const auto& w : j.at("words"))
      p.words.push_back({w.at("word").get<std::string>(), w.at("recording").get<std::string>()});
    if (auto it = j.find("seed"); it != j.end() && !it->is_null())
      p.seed = it->get<std::uint64_t>();
    if (auto it = j.find("source_text"); it != j.end() && !it->is_null())
      p.source_text = it->get<std::string>();
    if (p.words.empty()) throw ParseError("sentence plan has no words");
    if (p.seed.has_value() != (p.provenance == Provenance::random))
      throw ParseError("sentence plan: seed must be present exactly for random plans");
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed sentence plan: ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(std::string("malformed sentence plan: ") + e.what());
  }
}

SentencePlan plan_from_sentence(std::string_view sentence, const WordInventory& inventory,
                                Provenance provenance) {
  if (provenance == Provenance::random)
    throw UsageError("plan_from_sentence takes manual or llm provenance");
  const auto tokens = text::tokenize(sentence);
  if (tokens.empty()) throw DataError("sentence has no words: '" + std::string(sentence) + "'");

  std::vector<std::string> missing;
  for (const auto& t : tokens)
    if (!inventory.contains(t)) missing.push_back(t);
  if (!missing.empty()) throw OovSentenceError(std::string(sentence), std::move(missing));

  SentencePlan plan;
  plan.provenance = provenance;
  plan.source_text = std::string(sentence);
  for (const auto& t : tokens) plan.words.push_back({t, inventory.first_recording(t)});
  return plan;
}

SentencePlan plan_random(const WordInventory& inventory, std::size_t m, std::uint64_t seed) {
  if (inventory.empty()) throw DataError("cannot draw a random sentence from an empty inventory");
  if (m == 0) throw UsageError("random sentence length must be at least 1");

  const auto words = inventory.words();
  Rng rng(seed);
  SentencePlan plan;
  plan.provenance = Provenance::random;
  plan.seed = seed;
  plan.words.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& w = words[uniform_index(rng, words.size())];
    plan.words.push_back({w, inventory.first_recording(w)});
  }
  return plan;
}

nlohmann::json RejectedSentence::to_json() const {
  return {{"sentence", sentence}, {"missing", missing}, {"reason", reason}};
}

PlanBatch batch_plans(std::span<const std::string> sentences, const WordInventory& inventory,
                      Provenance provenance) {
  PlanBatch out;
  for (const auto& s : sentences) {
    try {
      out.accepted.push_back(plan_from_sentence(s, inventory, provenance));
    } catch (const OovSentenceError& e) {
      out.rejected.push_back({s, e.missing(), "out-of-inventory words"});
    } catch (const DataError& e) {
      out.rejected.push_back({s, {}, e.what()});
    }
  }
  return out;
}

}  // namespace corpusforge
