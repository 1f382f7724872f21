#include "corpusforge/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "corpusforge/audio.hpp"
#include "corpusforge/dataset.hpp"
#include "corpusforge/error.hpp"
#include "corpusforge/lexicon.hpp"
#include "corpusforge/llmclient.hpp"
#include "corpusforge/metrics.hpp"
#include "corpusforge/random.hpp"
#include "corpusforge/rechain.hpp"
#include "corpusforge/selector.hpp"
#include "corpusforge/text.hpp"

#ifndef CORPUSFORGE_VERSION
#define CORPUSFORGE_VERSION "0.0.0"
#endif

namespace corpusforge::cli {
namespace fs = std::filesystem;
using nlohmann::json;

#define CORPUSFORGE_RUN_CONFIG_FIELDS(X)                                                          \
  X(lexicon_path) X(corpus_path) X(k) X(k_prime) X(weights_path) X(manifest_path) X(speaker)    \
  X(sentences_path) X(llm_config_path) X(count) X(length) X(rechain_seed) X(plan_path)          \
  X(audio_root) X(gap_ms) X(fade_ms) X(policy) X(train_ratio) X(split_seed) X(pairs_path)       \
  X(mode) X(words_path) X(output_dir)

namespace {

template <class T>
void read_field(const json& j, const char* key, std::optional<T>& field) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return;
  try {
    field = it->get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config field '") + key + "': " + e.what());
  }
}

}  // namespace

RunConfig RunConfig::from_json(const json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  RunConfig c;
#define X(name) read_field(j, #name, c.name);
  CORPUSFORGE_RUN_CONFIG_FIELDS(X)
#undef X
  return c;
}

RunConfig RunConfig::load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config '" + path.string() + "'");
  try {
    return from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

json RunConfig::to_json() const {
  json j = json::object();
#define X(name) \
  if (name) j[#name] = *name;
  CORPUSFORGE_RUN_CONFIG_FIELDS(X)
#undef X
  return j;
}

RunConfig RunConfig::merged_over(const RunConfig& fallback) const {
  RunConfig c;
#define X(name) c.name = name ? name : fallback.name;
  CORPUSFORGE_RUN_CONFIG_FIELDS(X)
#undef X
  return c;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

std::string_view tool_version() noexcept { return CORPUSFORGE_VERSION; }

namespace {

template <class T>
const T& require(const std::optional<T>& v, std::string_view flag) {
  if (!v) throw UsageError("missing required option " + std::string(flag));
  return *v;
}

fs::path existing_file(const std::optional<std::string>& v, std::string_view flag) {
  fs::path p = require(v, flag);
  if (!fs::is_regular_file(p))
    throw UsageError(std::string(flag) + ": file not found: '" + p.string() + "'");
  return p;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path.string() + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = text::trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

// Output directory plus the provenance record written as run.json.
class Run {
 public:
  Run(std::string command, const RunConfig& config)
      : command_(std::move(command)), config_(config) {
    dir_ = require(config.output_dir, "--out-dir");
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_))
      throw UsageError("cannot create output directory '" + dir_.string() + "'");
  }

  void input(const std::string& name, const fs::path& p) {
    inputs_[name] = {{"path", p.string()}, {"sha256", sha256_file(p)}};
  }
  void seed(const std::string& name, std::uint64_t value) { seeds_[name] = value; }

  void write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + p.string() + "'");
    out << content;
    outputs_.push_back(name);
  }
  void write_wav_file(const std::string& name, const AudioClip& clip) {
    write_wav(clip, dir_ / name);
    outputs_.push_back(name);
  }

  void finish() {
    const json cfg = config_.to_json();
    const json record = {
        {"tool", "corpusforge"},
        {"tool_version", tool_version()},
        {"command", command_},
        {"config", cfg},
        {"config_hash", sha256_hex(cfg.dump())},
        {"seeds", seeds_},
        {"inputs", inputs_},
        {"outputs", outputs_},
        {"created_at", utc_timestamp()},
    };
    const fs::path p = dir_ / "run.json";
    std::ofstream out(p, std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + p.string() + "'");
    out << record.dump(2) << '\n';
  }

  const fs::path& dir() const { return dir_; }

 private:
  std::string command_;
  RunConfig config_;
  fs::path dir_;
  json seeds_ = json::object();
  json inputs_ = json::object();
  std::vector<std::string> outputs_;
};

std::string lines_of(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += w + '\n';
  return s;
}

std::string jsonl_of(const std::vector<json>& rows) {
  std::string s;
  for (const auto& r : rows) s += r.dump() + '\n';
  return s;
}

// ---------------------------------------------------------------------------

void cmd_select(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path lex_path = existing_file(cfg.lexicon_path, "--lexicon");
  const fs::path corpus_path = existing_file(cfg.corpus_path, "--corpus");
  const std::uint64_t k = require(cfg.k, "--k");
  if (k == 0) throw UsageError("--k must be at least 1");
  const bool run_pwps = cfg.k_prime.has_value() && *cfg.k_prime > 0;
  std::optional<fs::path> weights_path;
  if (run_pwps) weights_path = existing_file(cfg.weights_path, "--weights");

  Run run("select", cfg);
  const Lexicon lexicon = Lexicon::load(lex_path);
  std::vector<std::string> words;
  for (auto& line : read_lines(corpus_path))
    if (line.front() != '#') words.push_back(std::move(line));

  std::vector<std::string> oov;
  const CandidatePool pool = CandidatePool::from_words(lexicon, words, &oov);
  if (!oov.empty())
    err << "warning: skipped " << oov.size() << " corpus word(s) missing from the lexicon\n";
  if (pool.empty()) throw DataError("no corpus word is covered by the lexicon");

  const SelectionState gbc = gbc_select(pool, k);
  SelectionState pwps(1);
  if (run_pwps) {
    const PhonemeWeights weights = PhonemeWeights::load(*weights_path);
    const CandidatePool remainder = pool.without(gbc.words());
    if (!remainder.empty()) pwps = pwps_select(remainder, *cfg.k_prime, weights, gbc);
    run.input("weights", *weights_path);
  }
  const SelectionState combined = concatenate(gbc, pwps);

  run.input("lexicon", lex_path);
  run.input("corpus", corpus_path);
  run.write("selected_gbc.txt", lines_of(gbc.words()));
  run.write("selected_pwps.txt", lines_of(pwps.words()));
  const json coverage = {
      {"candidates", pool.size()},
      {"oov_skipped", oov.size()},
      {"oov_words", oov},
      {"gbc", coverage_report(gbc).to_json()},
      {"pwps", coverage_report(pwps).to_json()},
      {"combined", coverage_report(combined).to_json()},
  };
  run.write("coverage.json", coverage.dump(2) + '\n');
  run.finish();

  out << "selected " << combined.size() << " words (GBC " << gbc.size() << ", PWPS "
      << pwps.size() << "), " << combined.covered_biphones().size() << " distinct biphones\n";
}

void write_batch(Run& run, const PlanBatch& batch, std::ostream& out) {
  std::vector<json> plans;
  for (const auto& p : batch.accepted) plans.push_back(p.to_json());
  std::vector<json> rejected;
  for (const auto& r : batch.rejected) rejected.push_back(r.to_json());
  run.write("plans.jsonl", jsonl_of(plans));
  run.write("rejected.jsonl", jsonl_of(rejected));
  out << "accepted " << batch.accepted.size() << " sentence(s), rejected "
      << batch.rejected.size() << " for review\n";
}

WordInventory load_inventory(Run& run, const RunConfig& cfg, std::ostream& err) {
  const fs::path manifest_path = existing_file(cfg.manifest_path, "--manifest");
  const RecordingManifest manifest = load_manifest(manifest_path);
  for (const auto& w : manifest.warnings()) err << "warning: " << w << '\n';
  run.input("manifest", manifest_path);
  std::optional<std::string_view> speaker;
  if (cfg.speaker) speaker = *cfg.speaker;
  WordInventory inv = WordInventory::from_manifest(manifest, speaker);
  if (inv.empty())
    throw DataError(cfg.speaker ? "no recordings for speaker '" + *cfg.speaker + "'"
                                : std::string("manifest has no recordings"));
  return inv;
}

void cmd_rechain_manual(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path sentences_path = existing_file(cfg.sentences_path, "--sentences");
  Run run("rechain manual", cfg);
  const WordInventory inv = load_inventory(run, cfg, err);
  run.input("sentences", sentences_path);
  write_batch(run, batch_plans(read_lines(sentences_path), inv, Provenance::manual), out);
  run.finish();
}

void cmd_rechain_llm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path config_path = existing_file(cfg.llm_config_path, "--llm-config");
  const std::uint64_t count = require(cfg.count, "--count");
  Run run("rechain llm", cfg);
  const WordInventory inv = load_inventory(run, cfg, err);
  const LlmConfig llm = LlmConfig::load(config_path);
  run.input("llm_config", config_path);
  const auto request = GenerationRequest::from_config(llm, inv.words(), count);
  const auto options = ClientOptions::from_environment();
  const GenerationResult generated = generate_sentences(request, options);
  run.write("generated.txt", lines_of(generated.sentences));
  PlanBatch batch = batch_plans(generated.sentences, inv, Provenance::llm);
  for (const auto& plan : batch.accepted)
    for (const auto& w : plan.words)
      if (!inv.contains(w.word)) throw DataError("accepted plan uses unknown word '" + w.word + "'");
  write_batch(run, batch, out);
  run.finish();
}

void cmd_rechain_random(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = require(cfg.rechain_seed, "--seed");
  const std::uint64_t count = require(cfg.count, "--count");
  if (cfg.length && *cfg.length == 0) throw UsageError("--length must be at least 1");
  Run run("rechain random", cfg);
  const WordInventory inv = load_inventory(run, cfg, err);
  run.seed("rechain", seed);

  std::vector<json> plans;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t plan_seed = mix_seed(seed, i);
    std::uint64_t m = 0;
    if (cfg.length) {
      m = *cfg.length;
    } else {
      Rng length_rng(mix_seed(plan_seed, 0));
      m = 3 + uniform_index(length_rng, 6);  // uniform over [3, 8]
    }
    plans.push_back(plan_random(inv, m, plan_seed).to_json());
  }
  run.write("plans.jsonl", jsonl_of(plans));
  run.finish();
  out << "generated " << count << " random sentence(s)\n";
}

void cmd_concat(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const fs::path plan_path = existing_file(cfg.plan_path, "--plan");
  const fs::path root = require(cfg.audio_root, "--audio-root");
  if (!fs::is_directory(root))
    throw UsageError("--audio-root: directory not found: '" + root.string() + "'");
  ConcatSpec spec;
  if (cfg.gap_ms) spec.gap_ms = *cfg.gap_ms;
  if (cfg.fade_ms) spec.fade_ms = *cfg.fade_ms;

  Run run("concat", cfg);
  run.input("plan", plan_path);

  std::vector<SentencePlan> plans;
  {
    std::ifstream in(plan_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (text::trim(line).empty()) continue;
      try {
        plans.push_back(SentencePlan::from_json(json::parse(line)));
      } catch (const json::parse_error& e) {
        throw ParseError(plan_path.string() + ":" + std::to_string(lineno) + ": " + e.what());
      } catch (const ParseError& e) {
        throw ParseError(plan_path.string() + ":" + std::to_string(lineno) + ": " + e.what());
      }
    }
  }

  std::map<std::string, AudioClip> cache;
  std::vector<json> index;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    std::vector<AudioClip> clips;
    for (const auto& w : plans[i].words) {
      auto it = cache.find(w.recording);
      if (it == cache.end()) {
        const fs::path p = root / w.recording;
        if (!fs::is_regular_file(p))
          throw DataError("recording for '" + w.word + "' not found: '" + p.string() + "'");
        it = cache.emplace(w.recording, read_wav(p)).first;
      }
      clips.push_back(it->second);
    }
    const AudioClip utt = concat(plans[i], clips, spec);
    std::ostringstream id;
    id << "utt_" << std::setw(5) << std::setfill('0') << i;
    run.write_wav_file(id.str() + ".wav", utt);
    index.push_back({{"id", id.str()},
                     {"audio_path", id.str() + ".wav"},
                     {"transcript", plans[i].text()},
                     {"provenance", to_string(plans[i].provenance)},
                     {"num_samples", utt.samples.size()},
                     {"sample_rate", utt.sample_rate}});
  }
  run.write("utterances.jsonl", jsonl_of(index));
  run.finish();
  out << "wrote " << plans.size() << " utterance(s)\n";
}

void cmd_split(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path manifest_path = existing_file(cfg.manifest_path, "--manifest");
  const SplitPolicy policy = parse_split_policy(require(cfg.policy, "--policy"));
  const std::uint64_t seed = require(cfg.split_seed, "--seed");
  const double ratio = cfg.train_ratio.value_or(0.8);

  Run run("split", cfg);
  run.input("manifest", manifest_path);
  run.seed("split", seed);
  const RecordingManifest manifest = load_manifest(manifest_path);
  for (const auto& w : manifest.warnings()) err << "warning: " << w << '\n';

  const SplitAssignment assignment = split(manifest, policy, ratio, seed);
  const LeakageAudit audit = audit_leakage(manifest, assignment);

  std::ostringstream labels;
  assignment.write_jsonl(labels, manifest);
  run.write("split.jsonl", labels.str());

  json groups = json::array();
  for (const auto& [key, side] : assignment.group_key_audit)
    groups.push_back({{"key", key}, {"side", to_string(side)}});
  const json report = {
      {"policy", to_string(policy)},
      {"seed", seed},
      {"train_ratio", ratio},
      {"audit", audit.to_json()},
      {"groups", groups},
  };
  run.write("audit.json", report.dump(2) + '\n');
  run.finish();

  out << to_string(policy) << " split: " << audit.train_entries << " train / "
      << audit.test_entries << " test, " << audit.spanning_group_keys
      << " spanning group key(s), vocabulary overlap " << audit.vocabulary_overlap << '\n';
}

void cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const fs::path pairs_path = existing_file(cfg.pairs_path, "--pairs");
  const ErrorUnit unit = parse_error_unit(require(cfg.mode, "--mode"));

  Run run("eval", cfg);
  run.input("pairs", pairs_path);

  std::vector<EvalPair> pairs;
  {
    std::ifstream in(pairs_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (text::trim(line).empty()) continue;
      const std::string where = pairs_path.string() + ":" + std::to_string(lineno);
      try {
        const json j = json::parse(line);
        EvalPair p;
        p.id = j.contains("id") ? (j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump())
                                : "line " + std::to_string(lineno);
        p.reference = j.at("reference").get<std::string>();
        p.hypothesis = j.at("hypothesis").get<std::string>();
        pairs.push_back(std::move(p));
      } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }

  json per_pair = json::array();
  EditSummary pooled;
  for (const auto& p : pairs) {
    const EditSummary s = edit_rate(p, unit);
    pooled += s;
    json row = s.to_json();
    row["id"] = p.id;
    per_pair.push_back(row);
  }
  if (pairs.empty()) throw DataError("no evaluation pairs in '" + pairs_path.string() + "'");

  const json report = {{"mode", to_string(unit)}, {"pooled", pooled.to_json()}, {"pairs", per_pair}};
  run.write("eval.json", report.dump(2) + '\n');
  run.finish();
  out << to_string(unit) << " " << std::fixed << std::setprecision(4) << pooled.rate() << " ("
      << pooled.edits() << "/" << pooled.reference_length << ")\n";
}

void cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const fs::path lex_path = existing_file(cfg.lexicon_path, "--lexicon");
  const fs::path words_path = existing_file(cfg.words_path, "--words");
  const Lexicon lexicon = Lexicon::load(lex_path);

  std::vector<Candidate> selected;
  std::vector<std::string> oov;
  std::set<std::string> seen;
  for (const auto& line : read_lines(words_path)) {
    if (line.front() == '#') continue;
    std::string w = text::normalize_word(line);
    if (!seen.insert(w).second) continue;
    if (const auto* pron = lexicon.find(w))
      selected.emplace_back(w, *pron);
    else
      oov.push_back(w);
  }
  if (!oov.empty()) err << "warning: " << oov.size() << " word(s) missing from the lexicon\n";
  const auto state = SelectionState::replay(selected, std::max<std::size_t>(1, selected.size()));
  json report = coverage_report(state).to_json();
  report["oov_words"] = oov;

  if (cfg.output_dir) {
    Run run("report", cfg);
    run.input("lexicon", lex_path);
    run.input("words", words_path);
    run.write("coverage.json", report.dump(2) + '\n');
    run.finish();
  } else {
    out << report.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"corpusforge: word selection, re-chaining, splitting and scoring for ASR corpora"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "JSON run config; flags override its fields");

  RunConfig flags;
  auto out_dir = [&](CLI::App* sub) {
    sub->add_option("--out-dir", flags.output_dir, "Output directory");
  };

  auto* sel = app.add_subcommand("select", "GBC then PWPS word-list selection");
  sel->add_option("--lexicon", flags.lexicon_path, "Pronunciation lexicon (word<TAB>phonemes)");
  sel->add_option("--corpus", flags.corpus_path, "Candidate words, one per line");
  sel->add_option("--k", flags.k, "GBC word budget");
  sel->add_option("--k-prime", flags.k_prime, "PWPS word budget (0 disables)");
  sel->add_option("--weights", flags.weights_path, "PWPS phoneme weights JSON");
  out_dir(sel);

  auto* rechain = app.add_subcommand("rechain", "Build sentence plans from recorded words");
  rechain->require_subcommand(1);
  auto inventory_opts = [&](CLI::App* sub) {
    sub->add_option("--manifest", flags.manifest_path, "Recording manifest (CSV or JSONL)");
    sub->add_option("--speaker", flags.speaker, "Only use this speaker's recordings");
    out_dir(sub);
  };
  auto* manual = rechain->add_subcommand("manual", "Sentences from a text file, one per line");
  manual->add_option("--sentences", flags.sentences_path, "Sentence list");
  inventory_opts(manual);
  auto* llm = rechain->add_subcommand("llm", "Sentences from a text-generation service");
  llm->add_option("--llm-config", flags.llm_config_path, "Endpoint config JSON");
  llm->add_option("--count", flags.count, "Number of sentences to request");
  inventory_opts(llm);
  auto* random = rechain->add_subcommand("random", "Uniform bootstrap word sequences");
  random->add_option("--count", flags.count, "Number of plans");
  random->add_option("--seed", flags.rechain_seed, "Random seed (required)");
  random->add_option("--length", flags.length, "Fixed words per plan (default: uniform 3..8)");
  inventory_opts(random);

  auto* cat = app.add_subcommand("concat", "Render sentence plans to WAV");
  cat->add_option("--plan", flags.plan_path, "Plans JSONL");
  cat->add_option("--audio-root", flags.audio_root, "Directory recording paths are relative to");
  cat->add_option("--gap-ms", flags.gap_ms, "Silence between words (default 150)");
  cat->add_option("--fade-ms", flags.fade_ms, "Linear fade per clip edge (default 0)");
  out_dir(cat);

  auto* spl = app.add_subcommand("split", "Leakage-controlled train/test split");
  spl->add_option("--manifest", flags.manifest_path, "Recording manifest (CSV or JSONL)");
  spl->add_option("--policy", flags.policy, "strict, mixed or natural");
  spl->add_option("--ratio", flags.train_ratio, "Train fraction in entries (default 0.8)");
  spl->add_option("--seed", flags.split_seed, "Random seed (required)");
  out_dir(spl);

  auto* ev = app.add_subcommand("eval", "Pooled WER/CER");
  ev->add_option("--mode", flags.mode, "wer or cer");
  ev->add_option("--pairs", flags.pairs_path, "JSONL with id, reference, hypothesis");
  out_dir(ev);

  auto* rep = app.add_subcommand("report", "Coverage statistics of a word list");
  rep->add_option("--lexicon", flags.lexicon_path, "Pronunciation lexicon");
  rep->add_option("--words", flags.words_path, "Word list, one per line");
  rep->add_option("--out-dir", flags.output_dir, "Write coverage.json here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig cfg = flags;
    if (config_path) cfg = flags.merged_over(RunConfig::load(*config_path));

    if (*sel) cmd_select(cfg, out, err);
    else if (*manual) cmd_rechain_manual(cfg, out, err);
    else if (*llm) cmd_rechain_llm(cfg, out, err);
    else if (*random) cmd_rechain_random(cfg, out, err);
    else if (*cat) cmd_concat(cfg, out, err);
    else if (*spl) cmd_split(cfg, out, err);
    else if (*ev) cmd_eval(cfg, out, err);
    else if (*rep) cmd_report(cfg, out, err);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace corpusforge::cli
