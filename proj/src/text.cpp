#include "corpusforge/text.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "corpusforge/error.hpp"

namespace corpusforge::text {
namespace {

icu::UnicodeString nfc_lower(std::string_view s) {
  int32_t pos = 0;
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto len = static_cast<int32_t>(s.size());
  while (pos < len) {
    UChar32 c;
    U8_NEXT(bytes, pos, len, c);
    if (c < 0) throw DataError("invalid UTF-8 in '" + std::string(s) + "'");
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), len));
  icu::UnicodeString out = nfc->normalize(u, status);
  if (U_FAILURE(status)) throw DataError("cannot normalize '" + std::string(s) + "'");
  out.toLower(icu::Locale::getRoot());
  // Lowercasing can produce non-NFC sequences (e.g. U+0130).
  out = nfc->normalize(out, status);
  if (U_FAILURE(status)) throw DataError("cannot normalize '" + std::string(s) + "'");
  return out;
}

std::string to_utf8(const icu::UnicodeString& u) {
  std::string out;
  u.toUTF8String(out);
  return out;
}

}  // namespace

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string normalize_word(std::string_view word) {
  const icu::UnicodeString u = nfc_lower(word);
  int32_t begin = 0;
  int32_t end = u.length();
  while (begin < end && u_isUWhiteSpace(u.char32At(begin))) begin = u.moveIndex32(begin, 1);
  while (end > begin) {
    const int32_t prev = u.moveIndex32(end, -1);
    if (!u_isUWhiteSpace(u.char32At(prev))) break;
    end = prev;
  }
  return to_utf8(u.tempSubStringBetween(begin, end));
}

std::string normalize_sentence(std::string_view sentence) {
  const icu::UnicodeString u = nfc_lower(sentence);
  icu::UnicodeString out;
  bool pending_space = false;
  for (int32_t i = 0; i < u.length(); i = u.moveIndex32(i, 1)) {
    const UChar32 c = u.char32At(i);
    if (c < 0x80 && kStrippedPunctuation.find(static_cast<char>(c)) != std::string_view::npos)
      continue;
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.isEmpty();
      continue;
    }
    if (pending_space) {
      out.append(static_cast<UChar>(' '));
      pending_space = false;
    }
    out.append(c);
  }
  return to_utf8(out);
}

std::vector<std::string> tokenize(std::string_view sentence) {
  const std::string norm = normalize_sentence(sentence);
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start < norm.size()) {
    auto end = norm.find(' ', start);
    if (end == std::string::npos) end = norm.size();
    tokens.emplace_back(norm.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

std::vector<std::string> code_points(std::string_view s) {
  std::vector<std::string> out;
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto len = static_cast<int32_t>(s.size());
  int32_t pos = 0;
  while (pos < len) {
    const int32_t start = pos;
    UChar32 c;
    U8_NEXT(bytes, pos, len, c);
    if (c < 0) throw DataError("invalid UTF-8 in '" + std::string(s) + "'");
    out.emplace_back(s.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(pos - start)));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

}  // namespace corpusforge::text
