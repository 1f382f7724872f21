#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace corpusforge::cli {

// Settings shared by all subcommands. Every field may come from the JSON file
// given by --config; command-line flags take precedence.
struct RunConfig {
  std::optional<std::string> lexicon_path;
  std::optional<std::string> corpus_path;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> k_prime;
  std::optional<std::string> weights_path;
  std::optional<std::string> manifest_path;
  std::optional<std::string> speaker;
  std::optional<std::string> sentences_path;
  std::optional<std::string> llm_config_path;
  std::optional<std::uint64_t> count;
  std::optional<std::uint64_t> length;
  std::optional<std::uint64_t> rechain_seed;
  std::optional<std::string> plan_path;
  std::optional<std::string> audio_root;
  std::optional<std::uint32_t> gap_ms;
  std::optional<std::uint32_t> fade_ms;
  std::optional<std::string> policy;
  std::optional<double> train_ratio;
  std::optional<std::uint64_t> split_seed;
  std::optional<std::string> pairs_path;
  std::optional<std::string> mode;
  std::optional<std::string> words_path;
  std::optional<std::string> output_dir;

  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  // Fields set in `this` win over `fallback`.
  RunConfig merged_over(const RunConfig& fallback) const;
};

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

std::string_view tool_version() noexcept;

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Returns the process exit code:
// 0 success, 1 usage, 2 data, 3 external service.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corpusforge::cli
