#include <cmath>
#include <random>

#include "corpusforge/error.hpp"
#include "corpusforge/rechain.hpp"
#include "corpusforge/text.hpp"
#include "doctest.h"

using namespace corpusforge;

namespace {

WordInventory inventory(std::initializer_list<const char*> words) {
  WordInventory inv;
  for (const char* w : words) inv.add(w, std::string(w) + ".wav");
  return inv;
}

std::vector<std::string> words_of(const SentencePlan& p) {
  std::vector<std::string> out;
  for (const auto& w : p.words) out.push_back(w.word);
  return out;
}

}  // namespace

TEST_CASE("plan_from_sentence keeps token order and source text") {
  const auto plan = plan_from_sentence("Der Hund bellt.", inventory({"der", "hund", "bellt"}),
                                       Provenance::manual);
  CHECK(words_of(plan) == std::vector<std::string>{"der", "hund", "bellt"});
  CHECK(plan.words[1].recording == "hund.wav");
  CHECK(plan.source_text == "Der Hund bellt.");
  CHECK_FALSE(plan.seed.has_value());
}

TEST_CASE("plan_from_sentence rejects the whole sentence on OOV") {
  try {
    plan_from_sentence("Der Hund fliegt und schwimmt.", inventory({"der", "hund", "und"}),
                       Provenance::llm);
    FAIL("expected OOV");
  } catch (const OovSentenceError& e) {
    CHECK(e.missing() == std::vector<std::string>{"fliegt", "schwimmt"});
  }
}

TEST_CASE("plan_from_sentence normalizes case and punctuation") {
  CHECK(plan_from_sentence("HUND!", inventory({"hund"}), Provenance::manual).words.size() == 1);
  CHECK_THROWS_AS(plan_from_sentence(" .!? ", inventory({"hund"}), Provenance::manual), DataError);
}

TEST_CASE("first recording in manifest order is used") {
  WordInventory inv;
  inv.add("hund", "mic2.wav");
  inv.add("Hund", "mic1.wav");
  CHECK(plan_from_sentence("hund", inv, Provenance::manual).words[0].recording == "mic2.wav");
}

TEST_CASE("plan_random basics") {
  const auto one = plan_random(inventory({"ja"}), 4, 99);
  CHECK(words_of(one) == std::vector<std::string>(4, "ja"));
  CHECK(one.provenance == Provenance::random);
  CHECK(one.seed == 99u);

  const auto inv = inventory({"a", "b", "c", "d", "e"});
  CHECK(plan_random(inv, 12, 7) == plan_random(inv, 12, 7));
  CHECK_THROWS_AS(plan_random(WordInventory{}, 3, 1), DataError);
  CHECK_THROWS_AS(plan_random(inv, 0, 1), UsageError);
}

TEST_CASE("plan_random is uniform over distinct words, not recordings") {
  WordInventory inv;
  for (int i = 0; i < 7; ++i) inv.add("a", "a" + std::to_string(i) + ".wav");  // 7 mics
  inv.add("b", "b.wav");
  inv.add("c", "c.wav");
  const std::size_t m = 100000;
  const auto plan = plan_random(inv, m, 4242);
  std::map<std::string, std::size_t> freq;
  for (const auto& w : plan.words) ++freq[w.word];
  const double p = 1.0 / 3.0;
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(m));
  for (const auto& [w, n] : freq)
    CHECK(std::abs(static_cast<double>(n) / static_cast<double>(m) - p) <= 3 * sigma);
}

TEST_CASE("batch_plans aggregates without aborting") {
  const auto inv = inventory({"der", "hund", "bellt", "die", "katze"});
  const std::vector<std::string> sentences = {"Der Hund bellt.", "Die Katze fliegt.", "die katze"};
  const auto batch = batch_plans(sentences, inv, Provenance::manual);
  CHECK(batch.accepted.size() == 2);
  REQUIRE(batch.rejected.size() == 1);
  CHECK(batch.rejected[0].missing == std::vector<std::string>{"fliegt"});

  CHECK(batch_plans({}, inv, Provenance::manual).accepted.empty());
  const std::vector<std::string> bad = {"x y", "z"};
  const auto none = batch_plans(bad, inv, Provenance::llm);
  CHECK(none.accepted.empty());
  CHECK(none.rejected.size() == 2);
}

TEST_CASE("property: accepted plans replay and tokenization is idempotent") {
  std::mt19937_64 rng(3);
  const auto inv = inventory({"der", "hund", "bellt", "die", "katze", "schläft", "ja"});
  const auto words = inv.words();
  for (int trial = 0; trial < 200; ++trial) {
    std::string sentence;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      std::string w = words[rng() % words.size()];
      if (rng() % 2) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
      sentence += (i ? " " : "") + w + ((rng() % 4 == 0) ? "," : "");
    }
    const auto plan = plan_from_sentence(sentence + ".", inv, Provenance::manual);
    for (const auto& w : plan.words) CHECK(inv.contains(w.word));
    CHECK(text::tokenize(plan.text()) == words_of(plan));
  }
}

TEST_CASE("SentencePlan JSON round trip and validation") {
  const auto inv = inventory({"a", "b", "c"});
  const auto plan = plan_random(inv, 5, 123);
  CHECK(SentencePlan::from_json(plan.to_json()) == plan);
  const auto manual = plan_from_sentence("a b", inv, Provenance::manual);
  CHECK(SentencePlan::from_json(manual.to_json()) == manual);
  const auto j = manual.to_json();
  CHECK(j["seed"].is_null());
  CHECK(j["provenance"] == "manual");

  auto broken = plan.to_json();
  broken["seed"] = nullptr;
  CHECK_THROWS_AS(SentencePlan::from_json(broken), ParseError);
  CHECK_THROWS_AS(SentencePlan::from_json(nlohmann::json::object()), ParseError);
}
