// Copyright 2026 The verbpattern Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "verbpattern/conceptualize.h"
#include "verbpattern/corpus.h"
#include "verbpattern/errors.h"
#include "verbpattern/evaluate.h"
#include "verbpattern/pattern_store.h"
#include "verbpattern/solver.h"
#include "verbpattern/taxonomy.h"

namespace verbpattern::cli {
namespace {

using nlohmann::json;

constexpr char kVersion[] = "0.1.0";

std::string ReadFileBytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string Sha256Hex(const std::string &bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
             nullptr);
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

void WriteFile(const std::string &path, const std::string &bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << bytes;
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<std::string> SplitCommas(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct ExtractOptions {
  std::string corpus;
  std::string taxonomy;
  std::string idioms;
  std::string out;
  std::string from_manifest;
  std::string cooling_schedule = "cooling";
  std::uint64_t min_freq = 5;
  std::size_t workers = 0;
  SolverConfig config;
};

json InputEntry(const std::string &path) {
  if (path.empty()) return nullptr;
  return {{"path", path}, {"sha256", FileSha256(path)}};
}

json ConfigJson(const ExtractOptions &o) {
  return {{"theta", o.config.theta},
          {"gamma", o.config.gamma},
          {"t0", o.config.t0},
          {"cooling_a", o.config.cooling_a},
          {"cooling_schedule", o.cooling_schedule},
          {"beta", o.config.beta},
          {"restarts", o.config.restarts},
          {"seed", o.config.seed},
          {"max_iterations", o.config.max_iterations},
          {"min_freq", o.min_freq}};
}

// Replaces the config and inputs of `o` with those recorded in a manifest,
// after checking the input files still hash the same.
void ApplyManifest(ExtractOptions &o) {
  json manifest;
  try {
    manifest = json::parse(ReadFileBytes(o.from_manifest));
    const json &config = manifest.at("config");
    o.config.theta = config.at("theta").get<double>();
    o.config.gamma = config.at("gamma").get<double>();
    o.config.t0 = config.at("t0").get<double>();
    o.config.cooling_a = config.at("cooling_a").get<double>();
    o.cooling_schedule = config.at("cooling_schedule").get<std::string>();
    o.config.beta = config.at("beta").get<std::size_t>();
    o.config.restarts = config.at("restarts").get<std::size_t>();
    o.config.seed = config.at("seed").get<std::uint64_t>();
    o.config.max_iterations = config.at("max_iterations").get<std::size_t>();
    o.min_freq = config.at("min_freq").get<std::uint64_t>();
  } catch (const json::exception &e) {
    throw LoadError(o.from_manifest, 0, e.what());
  }
  const json &inputs = manifest.at("inputs");
  auto input = [&](const char *name, std::string &path) {
    const json &entry = inputs.at(name);
    if (entry.is_null()) {
      path.clear();
      return;
    }
    path = entry.at("path").get<std::string>();
    const std::string expected = entry.at("sha256").get<std::string>();
    if (FileSha256(path) != expected) {
      throw ConsistencyError(std::string(name) + " input '" + path +
                             "' no longer matches the manifest digest");
    }
  };
  input("corpus", o.corpus);
  input("taxonomy", o.taxonomy);
  input("idioms", o.idioms);
}

int RunExtract(ExtractOptions o, std::ostream &out) {
  if (!o.from_manifest.empty()) ApplyManifest(o);
  if (o.corpus.empty() || o.taxonomy.empty()) {
    throw ConfigError(
        "extract needs --corpus and --taxonomy (or --from-manifest)");
  }
  o.config.schedule = ParseCoolingSchedule(o.cooling_schedule);
  o.config.Validate();
  if (o.min_freq < 1) throw ConfigError("--min-freq must be >= 1");

  const PhraseCorpus corpus = LoadCorpusFile(o.corpus, o.min_freq);
  const Taxonomy taxonomy = LoadTaxonomyFile(o.taxonomy);
  const IdiomDictionary idioms =
      o.idioms.empty() ? IdiomDictionary() : LoadIdiomDictionaryFile(o.idioms);

  std::size_t workers = o.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::vector<SolveResult> results =
      SolveAll(corpus, taxonomy, idioms, o.config, workers);

  PatternStore store;
  for (const auto &r : results) {
    store.AddVerb(MakePatternRecords(r.assignment, corpus));
  }
  std::ostringstream jsonl;
  WritePatternsJsonl(jsonl, store);
  const std::string bytes = jsonl.str();
  WriteFile(o.out, bytes);

  json verbs = json::array();
  for (const auto &r : results) {
    verbs.push_back({{"verb", r.assignment.verb},
                     {"l_patterns", r.length.l_patterns},
                     {"l_conditional", r.length.l_conditional},
                     {"total", r.length.total},
                     {"iterations", r.iterations},
                     {"best_restart", r.best_restart}});
  }
  json manifest = {
      {"tool", "verbpattern extract"},
      {"version", kVersion},
      {"config", ConfigJson(o)},
      {"inputs",
       {{"corpus", InputEntry(o.corpus)},
        {"taxonomy", InputEntry(o.taxonomy)},
        {"idioms", InputEntry(o.idioms)}}},
      {"output", {{"patterns", o.out}, {"sha256", Sha256Hex(bytes)}}},
      {"verbs", std::move(verbs)},
  };
  WriteFile(o.out + ".manifest.json", manifest.dump(2) + "\n");

  out << "extracted " << store.num_patterns() << " patterns for "
      << results.size() << " verbs -> " << o.out << "\n";
  return 0;
}

int RunStats(const std::string &patterns_path, std::ostream &out) {
  const PatternStore store = ReadPatternsJsonlFile(patterns_path);
  char buf[64];
  out << "verb\tphrases\tpatterns\tconceptualized_fraction\n";
  std::size_t total_phrases = 0;
  std::size_t total_patterns = 0;
  std::size_t total_conceptualized = 0;
  const auto verbs = store.Verbs();
  for (const auto &verb : verbs) {
    std::size_t phrases = 0;
    std::size_t conceptualized = 0;
    const auto &records = *store.PatternsOf(verb);
    for (const auto &r : records) {
      phrases += r.phrases.size();
      if (r.pattern.is_concept()) conceptualized += r.phrases.size();
    }
    std::snprintf(buf, sizeof(buf), "%.6f",
                  phrases ? static_cast<double>(conceptualized) /
                                static_cast<double>(phrases)
                          : 0.0);
    out << verb << '\t' << phrases << '\t' << records.size() << '\t' << buf
        << '\n';
    total_phrases += phrases;
    total_patterns += records.size();
    total_conceptualized += conceptualized;
  }
  if (!verbs.empty()) {
    const double n = static_cast<double>(verbs.size());
    std::snprintf(buf, sizeof(buf), "*mean*\t%.1f\t%.1f\t%.6f",
                  static_cast<double>(total_phrases) / n,
                  static_cast<double>(total_patterns) / n,
                  total_phrases ? static_cast<double>(total_conceptualized) /
                                      static_cast<double>(total_phrases)
                                : 0.0);
    out << buf << '\n';
  }
  return 0;
}

struct EvalOptions {
  std::string patterns;
  std::string test;
  std::string gold;
  std::string baseline;
  std::string corpus;
  std::string taxonomy;
  std::uint64_t min_freq = 5;
};

int RunEval(const EvalOptions &o, std::ostream &out) {
  const std::vector<VerbPhrase> test = LoadTestPhrasesFile(o.test);
  const GoldLabels gold =
      o.gold.empty() ? GoldLabels() : LoadGoldLabelsFile(o.gold);
  PatternStore store;
  std::string method = "VP";
  if (!o.baseline.empty()) {
    const Baseline mode = ParseBaseline(o.baseline);
    if (o.corpus.empty() || o.taxonomy.empty()) {
      throw ConfigError("--baseline needs --corpus and --taxonomy");
    }
    store = BaselineStore(LoadCorpusFile(o.corpus, o.min_freq),
                          LoadTaxonomyFile(o.taxonomy), mode);
    method = std::string(BaselineName(mode));
  } else {
    if (o.patterns.empty()) throw ConfigError("eval needs --patterns");
    store = ReadPatternsJsonlFile(o.patterns);
  }
  out << FormatReport(CoveragePrecision(test, store, gold), method);
  return 0;
}

struct ConceptualizeOptions {
  std::string patterns;
  std::string taxonomy;
  std::string entity;
  std::string verb;
  std::string context;
  std::size_t top = 0;
  double smoothing = 0.0;
};

int RunConceptualize(const ConceptualizeOptions &o, std::ostream &out) {
  const Taxonomy taxonomy = LoadTaxonomyFile(o.taxonomy);
  const PatternStore store =
      o.patterns.empty() ? PatternStore() : ReadPatternsJsonlFile(o.patterns);
  const VerbPriorStore priors = BuildVerbPriors(store);
  const std::vector<std::string> context = SplitCommas(o.context);
  std::optional<std::string> verb;
  if (!o.verb.empty()) verb = o.verb;

  RankOptions options;
  options.top = o.top;
  options.smoothing = o.smoothing;
  json ranking = json::array();
  for (const auto &r :
       RankConcepts(o.entity, context, verb, taxonomy, priors, options)) {
    ranking.push_back({{"concept", r.concept_name}, {"score", r.score}});
  }
  json result = {{"entity", o.entity},
                 {"verb", verb ? json(*verb) : json(nullptr)},
                 {"context", context},
                 {"model", verb ? "verb_aware" : "entity_only"},
                 {"smoothing", o.smoothing},
                 {"ranking", std::move(ranking)}};
  if (verb) {
    const KnownPhraseResult known =
        ConceptualizeKnownPhrase(*verb, o.entity, store);
    json shortcut = {{"result", std::string(KnownPhraseKindName(known.kind))}};
    if (known.kind == KnownPhraseKind::kConcept) {
      shortcut["concept"] = known.concept_name;
    }
    result["known_phrase"] = std::move(shortcut);
  }
  out << result.dump(2) << '\n';
  return 0;
}

}  // namespace

std::string FileSha256(const std::string &path) {
  return Sha256Hex(ReadFileBytes(path));
}

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Verb pattern extraction and verb-aware conceptualization",
               "verbpattern"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ExtractOptions ex;
  auto *extract = app.add_subcommand(
      "extract", "Assign each verb phrase to an idiom or concept pattern");
  extract->add_option("--corpus", ex.corpus, "verb<TAB>object<TAB>count TSV")
      ->check(CLI::ExistingFile);
  extract
      ->add_option("--taxonomy", ex.taxonomy,
                   "concept<TAB>entity<TAB>count TSV")
      ->check(CLI::ExistingFile);
  extract->add_option("--idioms", ex.idioms, "verb<TAB>object idiom list")
      ->check(CLI::ExistingFile);
  extract->add_option("--out", ex.out, "patterns JSONL to write")->required();
  auto *from_manifest =
      extract
          ->add_option("--from-manifest", ex.from_manifest,
                       "rerun with the inputs and config of a manifest")
          ->check(CLI::ExistingFile);
  std::vector<CLI::Option *> config_flags = {
      extract->add_option("--theta", ex.config.theta, "weight of L_R")
          ->check(CLI::NonNegativeNumber),
      extract->add_option("--gamma", ex.config.gamma, "idiom typicality")
          ->check(CLI::PositiveNumber),
      extract->add_option("--t0", ex.config.t0, "initial temperature, bits")
          ->check(CLI::PositiveNumber),
      extract
          ->add_option("--cooling-a", ex.config.cooling_a, "cooling exponent A")
          ->check(CLI::PositiveNumber),
      extract
          ->add_option("--cooling-schedule", ex.cooling_schedule,
                       "cooling (t0*S^-A) or literal (S^A)")
          ->check(CLI::IsMember({"cooling", "literal"})),
      extract
          ->add_option("--beta", ex.config.beta,
                       "stop after this many unchanged iterations")
          ->check(CLI::PositiveNumber),
      extract
          ->add_option("--restarts", ex.config.restarts,
                       "independent chains per verb")
          ->check(CLI::PositiveNumber),
      extract->add_option("--max-iterations", ex.config.max_iterations,
                          "per chain; 0 = 20 x candidate patterns"),
      extract->add_option("--seed", ex.config.seed, "chain k uses seed + k"),
      extract
          ->add_option("--min-freq", ex.min_freq,
                       "drop phrases with a smaller count")
          ->check(CLI::PositiveNumber),
  };
  for (auto *flag : config_flags) from_manifest->excludes(flag);
  extract->add_option("--workers", ex.workers, "solver threads; 0 = all cores");

  std::string stats_patterns;
  auto *stats = app.add_subcommand("stats", "Per-verb pattern statistics");
  stats->add_option("--patterns", stats_patterns, "patterns JSONL")
      ->required()
      ->check(CLI::ExistingFile);

  EvalOptions ev;
  auto *eval =
      app.add_subcommand("eval", "Coverage and precision on a test set");
  eval->add_option("--patterns", ev.patterns, "patterns JSONL")
      ->check(CLI::ExistingFile);
  eval->add_option("--test", ev.test, "verb<TAB>object test phrases")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--gold", ev.gold, "verb<TAB>object<TAB>kind<TAB>label")
      ->check(CLI::ExistingFile);
  eval->add_option("--baseline", ev.baseline, "evaluate a baseline instead")
      ->check(CLI::IsMember({"ib", "cb"}));
  eval->add_option("--corpus", ev.corpus, "corpus for --baseline")
      ->check(CLI::ExistingFile);
  eval->add_option("--taxonomy", ev.taxonomy, "taxonomy for --baseline")
      ->check(CLI::ExistingFile);
  eval->add_option("--min-freq", ev.min_freq, "corpus threshold for --baseline")
      ->check(CLI::PositiveNumber);

  ConceptualizeOptions co;
  auto *conceptualize =
      app.add_subcommand("conceptualize", "Rank the concepts of an entity");
  conceptualize->add_option("--patterns", co.patterns, "patterns JSONL")
      ->check(CLI::ExistingFile);
  conceptualize->add_option("--taxonomy", co.taxonomy, "taxonomy TSV")
      ->required()
      ->check(CLI::ExistingFile);
  conceptualize->add_option("--entity", co.entity, "entity to conceptualize")
      ->required();
  conceptualize->add_option("--verb", co.verb,
                            "verb taking the entity as object");
  conceptualize->add_option("--context", co.context,
                            "comma-separated context entities");
  conceptualize->add_option("--top", co.top, "keep the first k concepts");
  conceptualize
      ->add_option("--smoothing", co.smoothing,
                   "additive epsilon on context and prior factors")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (extract->parsed()) return RunExtract(ex, out);
    if (stats->parsed()) return RunStats(stats_patterns, out);
    if (eval->parsed()) return RunEval(ev, out);
    if (conceptualize->parsed()) return RunConceptualize(co, out);
  } catch (const std::exception &e) {
    err << "verbpattern: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace verbpattern::cli
