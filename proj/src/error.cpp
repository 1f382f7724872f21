#include "corpusforge/error.hpp"

#include "corpusforge/text.hpp"

namespace corpusforge {

OovSentenceError::OovSentenceError(std::string sentence, std::vector<std::string> missing)
    : DataError("sentence uses words outside the inventory: [" + text::join(missing, ", ") +
                "]"),
      sentence_(std::move(sentence)),
      missing_(std::move(missing)) {}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const UsageError*>(&e)) return 1;
  if (dynamic_cast<const ServiceError*>(&e)) return 3;
  return 2;
}

}  // namespace corpusforge
