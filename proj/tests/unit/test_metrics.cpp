#include <random>

#include "corpusforge/error.hpp"
#include "corpusforge/metrics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace corpusforge;

namespace {
using Tokens = std::vector<std::string>;
}

TEST_CASE("normalize_for_scoring") {
  CHECK(normalize_for_scoring("Der Hund!", ErrorUnit::word) == Tokens{"der", "hund"});
  CHECK(normalize_for_scoring("Der Hund!", ErrorUnit::character) ==
        Tokens{"d", "e", "r", " ", "h", "u", "n", "d"});
  CHECK(normalize_for_scoring("  a   b ", ErrorUnit::word) == Tokens{"a", "b"});
  CHECK(normalize_for_scoring("Grüße", ErrorUnit::character) == Tokens{"g", "r", "ü", "ß", "e"});
}

TEST_CASE("edit_rate point values") {
  const auto same = edit_rate({"1", "der hund bellt", "der hund bellt"}, ErrorUnit::word);
  CHECK(same.edits() == 0);
  CHECK(same.rate() == 0.0);

  const auto del = edit_rate({"2", "der hund bellt", "der hund"}, ErrorUnit::word);
  CHECK(del.deletions == 1);
  CHECK(del.edits() == 1);
  CHECK(del.reference_length == 3);
  CHECK(del.rate() == 1.0 / 3.0);

  const auto si = edit_rate({"3", "a", "b c"}, ErrorUnit::word);
  CHECK(si.substitutions == 1);
  CHECK(si.insertions == 1);
  CHECK(si.rate() == 2.0);

  const auto sub = edit_rate({"4", "abc", "abd"}, ErrorUnit::character);
  CHECK(sub.substitutions == 1);
  CHECK(sub.rate() == 1.0 / 3.0);

  // oracle cross-check of the frozen totals
  CHECK(oracle::edit_distance({"der", "hund", "bellt"}, {"der", "hund"}) == 1);
  CHECK(oracle::edit_distance({"a"}, {"b", "c"}) == 2);
  CHECK(oracle::edit_distance({"a", "b", "c"}, {"a", "b", "d"}) == 1);
}

TEST_CASE("backtrace prefers substitution, then deletion, then insertion") {
  // "ab" vs "ba": minimal 2 either as 2 subs or del+ins
  const auto s = align(Tokens{"a", "b"}, Tokens{"b", "a"});
  CHECK(s.substitutions == 2);
  CHECK(s.deletions == 0);
  CHECK(s.insertions == 0);
  const auto d = align(Tokens{"a", "b"}, Tokens{});
  CHECK(d.deletions == 2);
  const auto i = align(Tokens{}, Tokens{"x"});
  CHECK(i.insertions == 1);
}

TEST_CASE("empty references are errors") {
  CHECK_THROWS_AS(edit_rate({"e", " ... ", "x"}, ErrorUnit::word), DataError);
  const std::vector<EvalPair> pairs = {{"ok", "a", "a"}, {"bad", "", "a"}};
  try {
    corpus_rate(pairs, ErrorUnit::word);
    FAIL("expected error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("'bad'") != std::string::npos);
  }
  CHECK_THROWS_AS(corpus_rate(std::vector<EvalPair>{}, ErrorUnit::word), UsageError);
}

TEST_CASE("corpus_rate pools edits") {
  // (1 edit, len 2) and (0 edits, len 8)
  const std::vector<EvalPair> pairs = {{"a", "x y", "x z"}, {"b", "a b c d e f g h", "a b c d e f g h"}};
  const auto pooled = corpus_rate(pairs, ErrorUnit::word);
  CHECK(pooled.edits() == 1);
  CHECK(pooled.reference_length == 10);
  CHECK(pooled.rate() == 0.1);

  const std::vector<EvalPair> twice = {{"a", "x", "x"}, {"b", "x", "x"}};
  CHECK(corpus_rate(twice, ErrorUnit::character).rate() == 0.0);
  const std::vector<EvalPair> single = {{"a", "der hund bellt", "der hund"}};
  CHECK(corpus_rate(single, ErrorUnit::word).rate() == edit_rate(single[0], ErrorUnit::word).rate());
}

TEST_CASE("property: DP matches recursive oracle and unit bounds hold") {
  std::mt19937_64 rng(99);
  auto random_tokens = [&](std::size_t alphabet) {
    Tokens t(rng() % 13);
    for (auto& x : t) x = std::string(1, static_cast<char>('a' + rng() % alphabet));
    return t;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t alphabet = 1 + rng() % 5;
    const Tokens ref = random_tokens(alphabet);
    const Tokens hyp = random_tokens(alphabet);
    const auto s = align(ref, hyp);
    CHECK(s.edits() == oracle::edit_distance(ref, hyp));
    CHECK(s.edits() <= std::max(ref.size(), hyp.size()));
    // S + D = |ref| - matches, S + I = |hyp| - matches
    CHECK(s.substitutions + s.deletions <= ref.size());
    CHECK(s.insertions + ref.size() - s.deletions == hyp.size());
    if (!ref.empty()) {
      CHECK(align(ref, ref).edits() == 0);
      CHECK(s.rate() <= static_cast<double>(hyp.size()) / static_cast<double>(ref.size()) + 1.0);
    }
  }
}

TEST_CASE("normalization invariance") {
  const EvalPair a{"a", "Der Hund bellt", "der katze  bellt"};
  const EvalPair b{"b", "  DER HUND BELLT. ", "Der Katze bellt "};
  for (auto unit : {ErrorUnit::word, ErrorUnit::character}) {
    const auto x = edit_rate(a, unit);
    const auto y = edit_rate(b, unit);
    CHECK(x.edits() == y.edits());
    CHECK(x.reference_length == y.reference_length);
  }
}
