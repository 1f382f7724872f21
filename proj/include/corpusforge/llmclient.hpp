#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "corpusforge/rechain.hpp"
#include "json.hpp"

namespace corpusforge {

inline constexpr std::string_view kLlmKeyEnv = "CORPUSFORGE_LLM_KEY";

// Endpoint settings, read from a JSON config:
//   {"endpoint_url": ..., "model_name": ..., "response_text_path": "choices.0.text",
//    "prompt_template": "... {words} ... {count} ..."}
struct LlmConfig {
  std::string endpoint_url;
  std::string model_name;
  std::string response_text_path = "choices.0.text";
  std::string prompt_template;

  static LlmConfig from_json(const nlohmann::json& j);
  static LlmConfig load(const std::filesystem::path& path);
};

struct GenerationRequest {
  std::vector<std::string> inventory_words;
  std::size_t sentence_count = 1;
  std::string prompt_template;  // must contain {words} and {count}
  std::string endpoint_url;
  std::string model_name;
  std::string response_text_path = "choices.0.text";

  static GenerationRequest from_config(const LlmConfig& config,
                                       std::vector<std::string> inventory_words,
                                       std::size_t sentence_count);

  // Throws UsageError on a missing placeholder or sentence_count == 0.
  void validate() const;
  // {words} -> words joined by ", ", {count} -> sentence_count.
  std::string render_prompt() const;
  // The exact JSON body sent on every attempt.
  std::string body() const;
};

struct GenerationResult {
  std::string raw_text;
  std::vector<std::string> sentences;  // trimmed, blank lines dropped
};

struct ClientOptions {
  std::string api_key;
  // Retries after the first attempt; waits base, 2*base, 4*base, ...
  int max_retries = 3;
  std::chrono::milliseconds base_backoff{1000};
  std::chrono::seconds timeout{60};
  // Injected for tests; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;

  // Reads the key from CORPUSFORGE_LLM_KEY; throws UsageError if unset.
  static ClientOptions from_environment();
};

// Follows a dotted path through objects and arrays ("choices.0.text").
// Throws ServiceError(format) when the path does not resolve to a string.
std::string extract_text(const nlohmann::json& response, std::string_view path);

// POSTs {"model", "prompt"} to the endpoint.
// Connection failures and 5xx responses are transient and retried with
// exponential backoff; after max_retries the call fails with a permanent
// ServiceError. Any other non-2xx fails immediately. Unparseable responses
// give ServiceError(format); no usable lines give ServiceError(empty_result).
GenerationResult generate_sentences(const GenerationRequest& request, const ClientOptions& options);

// Generates sentences and routes them through inventory validation.
// Rejected sentences are returned for human review. Every accepted plan is
// re-checked against the inventory.
PlanBatch generate_validated_plans(const GenerationRequest& request, const WordInventory& inventory,
                                   const ClientOptions& options);

}  // namespace corpusforge
