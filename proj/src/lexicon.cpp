#include "corpusforge/lexicon.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "corpusforge/error.hpp"
#include "corpusforge/text.hpp"

namespace corpusforge {
namespace {

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

std::string location(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

}  // namespace

PhonemeSequence::PhonemeSequence(std::vector<Phoneme> phonemes) : phonemes_(std::move(phonemes)) {
  if (phonemes_.empty()) throw DataError("phoneme sequence must not be empty");
  for (const auto& p : phonemes_) {
    if (p.empty()) throw DataError("empty phoneme symbol");
    if (has_whitespace(p)) throw DataError("phoneme symbol contains whitespace: '" + p + "'");
  }
}

std::set<Phoneme> PhonemeSequence::distinct() const {
  return {phonemes_.begin(), phonemes_.end()};
}

std::string PhonemeSequence::str() const { return text::join(phonemes_, " "); }

BiphoneSet biphones(const PhonemeSequence& seq) {
  BiphoneSet out;
  for (std::size_t i = 1; i < seq.size(); ++i) out.emplace(seq[i - 1], seq[i]);
  return out;
}

Lexicon Lexicon::parse(std::istream& in, std::string_view source_name) {
  Lexicon lex;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(location(source_name, lineno) + ": expected 'word<TAB>phonemes', got 1 field");
    if (line.find('\t', tab + 1) != std::string::npos)
      throw ParseError(location(source_name, lineno) + ": more than 2 tab-separated fields");

    std::string word;
    try {
      word = text::normalize_word(std::string_view(line).substr(0, tab));
    } catch (const DataError& e) {
      throw ParseError(location(source_name, lineno) + ": " + e.what());
    }
    if (word.empty()) throw ParseError(location(source_name, lineno) + ": empty word");

    const std::string_view pron = std::string_view(line).substr(tab + 1);
    std::vector<Phoneme> phones;
    std::size_t start = 0;
    while (true) {
      const auto space = pron.find(' ', start);
      const auto token = pron.substr(start, space == std::string_view::npos ? pron.npos : space - start);
      if (token.empty() || has_whitespace(token))
        throw ParseError(location(source_name, lineno) + ": empty phoneme token in '" +
                         std::string(pron) + "'");
      phones.emplace_back(token);
      if (space == std::string_view::npos) break;
      start = space + 1;
    }

    if (auto it = first_line.find(word); it != first_line.end()) {
      throw ParseError(location(source_name, lineno) + ": duplicate word '" + word +
                       "' (first defined on line " + std::to_string(it->second) + ")");
    }
    first_line.emplace(word, lineno);
    lex.entries_.emplace(std::move(word), PhonemeSequence(std::move(phones)));
  }
  return lex;
}

Lexicon Lexicon::parse_string(std::string_view content, std::string_view source_name) {
  std::istringstream in{std::string(content)};
  return parse(in, source_name);
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open lexicon '" + path.string() + "'");
  return parse(in, path.string());
}

const PhonemeSequence& Lexicon::phonemize(std::string_view word) const {
  std::string key = text::normalize_word(word);
  auto it = entries_.find(key);
  if (it == entries_.end()) throw OovError(std::move(key));
  return it->second;
}

const PhonemeSequence* Lexicon::find(std::string_view word) const {
  auto it = entries_.find(text::normalize_word(word));
  return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::insert(std::string_view word, PhonemeSequence pronunciation) {
  std::string key = text::normalize_word(word);
  if (key.empty()) throw DataError("empty word");
  if (entries_.contains(key)) throw DataError("duplicate word '" + key + "'");
  entries_.emplace(std::move(key), std::move(pronunciation));
}

void Lexicon::serialize(std::ostream& out) const {
  for (const auto& [word, pron] : entries_) out << word << '\t' << pron.str() << '\n';
}

}  // namespace corpusforge
