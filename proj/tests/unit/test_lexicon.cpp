#include <random>
#include <sstream>

#include "corpusforge/error.hpp"
#include "corpusforge/lexicon.hpp"
#include "corpusforge/text.hpp"
#include "doctest.h"

using namespace corpusforge;

namespace {
std::vector<Phoneme> seq(std::initializer_list<const char*> ps) { return {ps.begin(), ps.end()}; }
}  // namespace

TEST_CASE("parse_lexicon reads a tab-separated entry") {
  const auto lex = Lexicon::parse_string("hund\th ʊ n t\n");
  REQUIRE(lex.size() == 1);
  CHECK(lex.phonemize("hund").phonemes() == seq({"h", "ʊ", "n", "t"}));
}

TEST_CASE("parse_lexicon skips comments and blank lines") {
  const auto lex = Lexicon::parse_string("# comment\n\n   \nja\tj aː\n");
  CHECK(lex.size() == 1);
  CHECK(lex.phonemize("ja").phonemes() == seq({"j", "aː"}));
}

TEST_CASE("parse_lexicon rejects keys that collide after normalization") {
  try {
    Lexicon::parse_string("a\tə\nA\tə\n", "lex.tsv");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("lex.tsv:2") != std::string::npos);
    CHECK(msg.find("line 1") != std::string::npos);
  }
}

TEST_CASE("parse_lexicon error paths") {
  CHECK_THROWS_AS(Lexicon::parse_string("hund h ʊ n t\n"), ParseError);  // no tab
  CHECK_THROWS_AS(Lexicon::parse_string("hund\t\n"), ParseError);        // no phonemes
  CHECK_THROWS_AS(Lexicon::parse_string("hund\th  ʊ\n"), ParseError);    // empty token
  CHECK_THROWS_AS(Lexicon::parse_string("hund\th ʊ \n"), ParseError);    // trailing space
  CHECK_THROWS_AS(Lexicon::parse_string("\th ʊ\n"), ParseError);         // empty word
  CHECK_THROWS_AS(Lexicon::parse_string("a\tb\tc\n"), ParseError);       // 3 fields
}

TEST_CASE("parse_lexicon tolerates CRLF line endings") {
  const auto lex = Lexicon::parse_string("ja\tj aː\r\nnein\tn aɪ n\r\n");
  CHECK(lex.phonemize("nein").size() == 3);
}

TEST_CASE("phonemize normalizes case and reports OOV") {
  const auto lex = Lexicon::parse_string("hund\th ʊ n t\n");
  CHECK(lex.phonemize("Hund") == lex.phonemize("hund"));
  CHECK(lex.phonemize("HUND") == lex.phonemize("hund"));
  CHECK(lex.phonemize("  hund ") == lex.phonemize("hund"));
  try {
    lex.phonemize("XyZZy");
    FAIL("expected OOV");
  } catch (const OovError& e) {
    CHECK(e.word() == "xyzzy");
  }
}

TEST_CASE("normalization is NFC and Unicode-aware") {
  // "Ä" composed vs "A" + combining diaeresis
  const auto lex = Lexicon::parse_string("\xC3\x84pfel\t\xC9\x9B p f \xC9\x99 l\n");
  CHECK(lex.find("A\xCC\x88PFEL") != nullptr);
  CHECK(text::normalize_word("STRA\xC3\x9F" "E") == "stra\xC3\x9F" "e");
}

TEST_CASE("biphones are consecutive pairs as a set") {
  CHECK(biphones(PhonemeSequence(seq({"a", "b", "a"}))) == BiphoneSet{{"a", "b"}, {"b", "a"}});
  CHECK(biphones(PhonemeSequence(seq({"ə"}))).empty());
  CHECK(biphones(PhonemeSequence(seq({"a", "a", "a"}))) == BiphoneSet{{"a", "a"}});
  CHECK(biphones(PhonemeSequence(seq({"a", "b"}))) != biphones(PhonemeSequence(seq({"b", "a"}))));
}

TEST_CASE("PhonemeSequence rejects empty input") {
  CHECK_THROWS_AS(PhonemeSequence({}), DataError);
  CHECK_THROWS_AS(PhonemeSequence(seq({"a", ""})), DataError);
  CHECK_THROWS_AS(PhonemeSequence(seq({"a b"})), DataError);
}

TEST_CASE("property: biphone count bound and serialize/parse round trip") {
  std::mt19937_64 rng(7);
  const char* alphabet[] = {"a", "b", "ç", "ʊ", "aː"};
  for (int trial = 0; trial < 200; ++trial) {
    Lexicon lex;
    const int n = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < n; ++i) {
      std::vector<Phoneme> ps;
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int j = 0; j < len; ++j) ps.emplace_back(alphabet[rng() % 5]);
      const PhonemeSequence s(ps);
      CHECK(biphones(s).size() <= s.size() - 1);
      lex.insert("w" + std::to_string(i), s);
    }
    std::ostringstream out;
    lex.serialize(out);
    const auto again = Lexicon::parse_string(out.str());
    CHECK(again.entries() == lex.entries());
  }
}
