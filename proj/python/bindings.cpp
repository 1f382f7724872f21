#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "corpusforge/audio.hpp"
#include "corpusforge/dataset.hpp"
#include "corpusforge/error.hpp"
#include "corpusforge/lexicon.hpp"
#include "corpusforge/metrics.hpp"
#include "corpusforge/rechain.hpp"
#include "corpusforge/selector.hpp"
#include "corpusforge/text.hpp"

namespace py = pybind11;
using namespace corpusforge;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

CandidatePool pool_of(const Lexicon& lexicon, const std::vector<std::string>& words) {
  return CandidatePool::from_words(lexicon, words);
}

py::dict selection_dict(const SelectionState& state) {
  py::dict d;
  d["words"] = state.words();
  d["report"] = to_python(coverage_report(state).to_json());
  return d;
}

SelectionState replay(const Lexicon& lexicon, const std::vector<std::string>& words) {
  const auto pool = pool_of(lexicon, words);
  SelectionState state(std::max<std::size_t>(1, words.size()));
  for (const auto& w : words) state.add(pool[*pool.index_of(text::normalize_word(w))]);
  return state;
}

std::vector<EvalPair> pairs_of(const std::vector<std::tuple<std::string, std::string, std::string>>& in) {
  std::vector<EvalPair> out;
  for (const auto& [id, ref, hyp] : in) out.push_back({id, ref, hyp});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "corpusforge native core";
  m.attr("__version__") = CORPUSFORGE_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", base);
  auto data = py::register_exception<DataError>(m, "DataError", base);
  py::register_exception<ServiceError>(m, "ServiceError", base);
  (void)data;

  py::class_<Lexicon>(m, "Lexicon")
      .def_static("load", &Lexicon::load, py::arg("path"))
      .def_static("parse", [](const std::string& s) { return Lexicon::parse_string(s); }, py::arg("text"))
      .def("phonemize", [](const Lexicon& l, const std::string& w) { return l.phonemize(w).phonemes(); },
           py::arg("word"))
      .def("words",
           [](const Lexicon& l) {
             std::vector<std::string> out;
             for (const auto& [w, _] : l.entries()) out.push_back(w);
             return out;
           })
      .def("__contains__", [](const Lexicon& l, const std::string& w) { return l.find(w) != nullptr; })
      .def("__len__", &Lexicon::size);

  m.def("biphones", [](const std::vector<std::string>& phones) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& b : biphones(PhonemeSequence(phones))) out.push_back(b);
    return out;
  }, py::arg("phonemes"));

  m.def("gbc_select",
        [](const Lexicon& lex, const std::vector<std::string>& words, std::size_t k) {
          return selection_dict(gbc_select(pool_of(lex, words), k));
        },
        py::arg("lexicon"), py::arg("words"), py::arg("k"));

  m.def("pwps_select",
        [](const Lexicon& lex, const std::vector<std::string>& words, std::size_t k_prime,
           const std::map<std::string, double>& weights, const std::vector<std::string>& prior,
           bool seed_counts_from_prior) {
          const auto prior_state = replay(lex, prior);
          return selection_dict(pwps_select(pool_of(lex, words), k_prime, PhonemeWeights(weights),
                                            prior_state, {.seed_counts_from_prior = seed_counts_from_prior}));
        },
        py::arg("lexicon"), py::arg("words"), py::arg("k_prime"), py::arg("weights"),
        py::arg("prior") = std::vector<std::string>{}, py::arg("seed_counts_from_prior") = false);

  m.def("brute_force_max_coverage",
        [](const Lexicon& lex, const std::vector<std::string>& words, std::size_t k) {
          const auto r = brute_force_max_coverage(pool_of(lex, words), k);
          return py::make_tuple(r.words, r.coverage);
        },
        py::arg("lexicon"), py::arg("words"), py::arg("k"));

  m.def("coverage_report",
        [](const Lexicon& lex, const std::vector<std::string>& words) {
          return to_python(coverage_report(replay(lex, words)).to_json());
        },
        py::arg("lexicon"), py::arg("words"));

  py::class_<RecordingManifest>(m, "Manifest")
      .def_static("load", &load_manifest, py::arg("path"))
      .def("__len__", &RecordingManifest::size)
      .def("entries",
           [](const RecordingManifest& man) {
             py::list out;
             for (const auto& e : man.entries()) {
               py::dict d;
               d["speaker_id"] = e.speaker_id;
               d["session_id"] = e.session_id;
               d["block_id"] = e.block_id;
               d["microphone_id"] = e.microphone_id;
               d["word"] = e.word;
               d["repetition_index"] = e.repetition_index;
               d["audio_path"] = e.audio_path;
               d["transcript"] = e.transcript;
               out.append(d);
             }
             return out;
           })
      .def_property_readonly("warnings", &RecordingManifest::warnings);

  py::class_<SplitAssignment>(m, "SplitAssignment")
      .def_readonly("seed", &SplitAssignment::seed)
      .def_readonly("train_ratio", &SplitAssignment::train_ratio)
      .def_property_readonly("policy", [](const SplitAssignment& a) { return std::string(to_string(a.policy)); })
      .def_property_readonly("labels", [](const SplitAssignment& a) {
        std::vector<std::string> out;
        for (const auto& [_, side] : a.labels) out.emplace_back(to_string(side));
        return out;
      });

  m.def("split",
        [](const RecordingManifest& man, const std::string& policy, double ratio, std::uint64_t seed) {
          return split(man, parse_split_policy(policy), ratio, seed);
        },
        py::arg("manifest"), py::arg("policy"), py::arg("train_ratio"), py::arg("seed"));

  m.def("audit_leakage",
        [](const RecordingManifest& man, const SplitAssignment& a) {
          return to_python(audit_leakage(man, a).to_json());
        },
        py::arg("manifest"), py::arg("assignment"));

  py::class_<WordInventory>(m, "WordInventory")
      .def(py::init<>())
      .def_static("from_manifest",
                  [](const RecordingManifest& man, std::optional<std::string> speaker) {
                    return speaker ? WordInventory::from_manifest(man, *speaker)
                                   : WordInventory::from_manifest(man);
                  },
                  py::arg("manifest"), py::arg("speaker") = std::nullopt)
      .def("add", &WordInventory::add, py::arg("word"), py::arg("recording"))
      .def("words", &WordInventory::words)
      .def("__contains__", [](const WordInventory& inv, const std::string& w) { return inv.contains(w); })
      .def("__len__", &WordInventory::size);

  m.def("plan_sentence",
        [](const std::string& sentence, const WordInventory& inv) {
          return to_python(plan_from_sentence(sentence, inv, Provenance::manual).to_json());
        },
        py::arg("sentence"), py::arg("inventory"));

  m.def("plan_random",
        [](const WordInventory& inv, std::size_t m, std::uint64_t seed) {
          return to_python(plan_random(inv, m, seed).to_json());
        },
        py::arg("inventory"), py::arg("m"), py::arg("seed"));

  py::class_<AudioClip>(m, "AudioClip")
      .def(py::init([](std::vector<std::int16_t> samples, std::uint32_t rate) {
             return AudioClip{std::move(samples), rate, ""};
           }),
           py::arg("samples"), py::arg("sample_rate"))
      .def_readwrite("samples", &AudioClip::samples)
      .def_readwrite("sample_rate", &AudioClip::sample_rate)
      .def("__len__", [](const AudioClip& c) { return c.samples.size(); });

  m.def("read_wav", &read_wav, py::arg("path"));
  m.def("write_wav", &write_wav, py::arg("clip"), py::arg("path"));
  m.def("concat",
        [](const std::vector<AudioClip>& clips, std::uint32_t gap_ms, std::uint32_t fade_ms) {
          return concat(clips, ConcatSpec{gap_ms, fade_ms});
        },
        py::arg("clips"), py::arg("gap_ms") = 150, py::arg("fade_ms") = 0);

  m.def("normalize_for_scoring",
        [](const std::string& text, const std::string& unit) {
          return normalize_for_scoring(text, parse_error_unit(unit));
        },
        py::arg("text"), py::arg("unit") = "wer");

  m.def("edit_rate",
        [](const std::string& ref, const std::string& hyp, const std::string& unit) {
          return to_python(edit_rate({"pair", ref, hyp}, parse_error_unit(unit)).to_json());
        },
        py::arg("reference"), py::arg("hypothesis"), py::arg("unit") = "wer");

  m.def("corpus_rate",
        [](const std::vector<std::tuple<std::string, std::string, std::string>>& pairs,
           const std::string& unit) {
          return to_python(corpus_rate(pairs_of(pairs), parse_error_unit(unit)).to_json());
        },
        py::arg("pairs"), py::arg("unit") = "wer");
}
