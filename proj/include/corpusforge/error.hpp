#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace corpusforge {

// Root of every error the library throws. The three direct subclasses
// line up with the CLI exit codes: usage = 1, data = 2, external service = 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad arguments, missing files, invalid configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DataError {
 public:
  using DataError::DataError;
};

class UnsupportedFormatError : public DataError {
 public:
  UnsupportedFormatError(std::string field, const std::string& message)
      : DataError(message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A word that is missing from a lexicon or a recorded inventory.
class OovError : public DataError {
 public:
  explicit OovError(std::string word)
      : DataError("out-of-vocabulary word: '" + word + "'"), word_(std::move(word)) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

// A sentence containing one or more tokens absent from the inventory.
class OovSentenceError : public DataError {
 public:
  OovSentenceError(std::string sentence, std::vector<std::string> missing);
  const std::string& sentence() const noexcept { return sentence_; }
  const std::vector<std::string>& missing() const noexcept { return missing_; }

 private:
  std::string sentence_;
  std::vector<std::string> missing_;
};

// Failures talking to an external text-generation service.
class ServiceError : public Error {
 public:
  enum class Kind { transient, permanent, format, empty_result };

  ServiceError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Maps an exception to the CLI exit-code taxonomy.
int exit_code_for(const std::exception& e) noexcept;

}  // namespace corpusforge
