#include "corpusforge/llmclient.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "corpusforge/error.hpp"
#include "corpusforge/text.hpp"
#include "httplib.h"

namespace corpusforge {
namespace {

constexpr std::string_view kWordsPlaceholder = "{words}";
constexpr std::string_view kCountPlaceholder = "{count}";

void replace_all(std::string& s, std::string_view what, std::string_view with) {
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + with.size()))
    s.replace(pos, what.size(), with);
}

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw UsageError("endpoint URL must start with http:// or https://: '" + url + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string excerpt(const std::string& body) {
  constexpr std::size_t kMax = 200;
  return body.size() <= kMax ? body : body.substr(0, kMax) + "...";
}

}  // namespace

LlmConfig LlmConfig::from_json(const nlohmann::json& j) {
  try {
    LlmConfig c;
    c.endpoint_url = j.at("endpoint_url").get<std::string>();
    c.model_name = j.at("model_name").get<std::string>();
    c.prompt_template = j.at("prompt_template").get<std::string>();
    if (j.contains("response_text_path"))
      c.response_text_path = j.at("response_text_path").get<std::string>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid LLM config: ") + e.what());
  }
}

LlmConfig LlmConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open LLM config '" + path.string() + "'");
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

GenerationRequest GenerationRequest::from_config(const LlmConfig& config,
                                                 std::vector<std::string> inventory_words,
                                                 std::size_t sentence_count) {
  GenerationRequest r;
  r.inventory_words = std::move(inventory_words);
  r.sentence_count = sentence_count;
  r.prompt_template = config.prompt_template;
  r.endpoint_url = config.endpoint_url;
  r.model_name = config.model_name;
  r.response_text_path = config.response_text_path;
  return r;
}

void GenerationRequest::validate() const {
  if (sentence_count == 0) throw UsageError("sentence count must be at least 1");
  if (prompt_template.find(kWordsPlaceholder) == std::string::npos ||
      prompt_template.find(kCountPlaceholder) == std::string::npos)
    throw UsageError("prompt template must contain both {words} and {count}");
  if (endpoint_url.empty()) throw UsageError("endpoint URL is empty");
}

std::string GenerationRequest::render_prompt() const {
  std::string prompt = prompt_template;
  replace_all(prompt, kWordsPlaceholder, text::join(inventory_words, ", "));
  replace_all(prompt, kCountPlaceholder, std::to_string(sentence_count));
  return prompt;
}

std::string GenerationRequest::body() const {
  return nlohmann::json{{"model", model_name}, {"prompt", render_prompt()}}.dump();
}

ClientOptions ClientOptions::from_environment() {
  const char* key = std::getenv(std::string(kLlmKeyEnv).c_str());
  if (key == nullptr || *key == '\0')
    throw UsageError("environment variable " + std::string(kLlmKeyEnv) + " is not set");
  ClientOptions o;
  o.api_key = key;
  return o;
}

std::string extract_text(const nlohmann::json& response, std::string_view path) {
  const nlohmann::json* node = &response;
  std::size_t start = 0;
  while (start <= path.size()) {
    auto dot = path.find('.', start);
    if (dot == std::string_view::npos) dot = path.size();
    const std::string seg(path.substr(start, dot - start));
    if (node->is_array()) {
      char* end = nullptr;
      const auto idx = std::strtoul(seg.c_str(), &end, 10);
      if (seg.empty() || *end != '\0' || idx >= node->size())
        throw ServiceError(ServiceError::Kind::format,
                           "response path '" + std::string(path) + "': bad array index '" + seg + "'");
      node = &(*node)[idx];
    } else if (node->is_object() && node->contains(seg)) {
      node = &(*node)[seg];
    } else {
      throw ServiceError(ServiceError::Kind::format,
                         "response path '" + std::string(path) + "': no field '" + seg + "'");
    }
    start = dot + 1;
  }
  if (!node->is_string())
    throw ServiceError(ServiceError::Kind::format,
                       "response path '" + std::string(path) + "' is not a string");
  return node->get<std::string>();
}

GenerationResult generate_sentences(const GenerationRequest& request, const ClientOptions& options) {
  request.validate();
  const Endpoint ep = split_url(request.endpoint_url);
  const std::string body = request.body();

  httplib::Client client(ep.origin);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_write_timeout(options.timeout);
  httplib::Headers headers;
  if (!options.api_key.empty()) headers.emplace("Authorization", "Bearer " + options.api_key);

  auto sleep = options.sleep ? options.sleep
                             : [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };

  std::string last_failure;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 0) sleep(options.base_backoff * (1LL << (attempt - 1)));

    auto res = client.Post(ep.path, headers, body, "application/json");
    if (!res) {
      last_failure = "connection failure: " + httplib::to_string(res.error());
    } else if (res->status >= 500) {
      last_failure = "HTTP " + std::to_string(res->status) + ": " + excerpt(res->body);
    } else if (res->status < 200 || res->status >= 300) {
      throw ServiceError(ServiceError::Kind::permanent,
                         "HTTP " + std::to_string(res->status) + ": " + excerpt(res->body));
    } else {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(res->body);
      } catch (const nlohmann::json::parse_error&) {
        if (text::trim(res->body).empty())
          throw ServiceError(ServiceError::Kind::empty_result, "service returned an empty body");
        throw ServiceError(ServiceError::Kind::format,
                           "response is not JSON: " + excerpt(res->body));
      }
      GenerationResult out;
      out.raw_text = extract_text(j, request.response_text_path);
      std::istringstream lines(out.raw_text);
      std::string line;
      while (std::getline(lines, line)) {
        const auto t = text::trim(line);
        if (!t.empty()) out.sentences.emplace_back(t);
      }
      if (out.sentences.empty())
        throw ServiceError(ServiceError::Kind::empty_result, "service returned no sentences");
      return out;
    }

    if (attempt >= options.max_retries)
      throw ServiceError(ServiceError::Kind::permanent,
                         "giving up after " + std::to_string(attempt + 1) + " attempts; last " +
                             last_failure);
  }
}

PlanBatch generate_validated_plans(const GenerationRequest& request, const WordInventory& inventory,
                                   const ClientOptions& options) {
  const GenerationResult generated = generate_sentences(request, options);
  PlanBatch batch = batch_plans(generated.sentences, inventory, Provenance::llm);
  for (const auto& plan : batch.accepted)
    for (const auto& w : plan.words)
      if (!inventory.contains(w.word))
        throw DataError("accepted plan contains out-of-inventory word '" + w.word + "'");
  return batch;
}

}  // namespace corpusforge
