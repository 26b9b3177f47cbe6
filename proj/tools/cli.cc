// Copyright 2026 The kpx Authors.
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

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kpx/batch.h"
#include "kpx/errors.h"
#include "kpx/evaluation.h"
#include "kpx/idf_model.h"
#include "kpx/io.h"
#include "kpx/knowledge_base.h"
#include "kpx/scoring.h"
#include "kpx/text.h"

#ifndef KPX_VERSION
#define KPX_VERSION "dev"
#endif

namespace kpx {

namespace {

const std::vector<std::string> kLogBaseNames = {"e", "2", "10"};

struct LoadedStopList {
  StopList list;
  InputDigest digest;
};

LoadedStopList LoadStopList(const std::string& path) {
  if (path.empty()) {
    return {StopList::Default(),
            {"stoplist", StopList::Default().source(),
             Sha256Hex(StopList::DefaultText())}};
  }
  const std::string bytes = ReadFile(path);
  return {StopList::Parse(bytes, path), {"stoplist", path, Sha256Hex(bytes)}};
}

// Loads a model file and records its digest.
template <typename Model>
Model LoadModel(const std::string& role, const std::string& path,
                std::vector<InputDigest>* inputs) {
  const std::string bytes = ReadFile(path);
  std::istringstream in(bytes);
  inputs->push_back({role, path, Sha256Hex(bytes)});
  return Model::Load(in, path);
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) throw DataError("cannot write " + path);
}

// Flags shared by extract and evaluate.
struct ScoringFlags {
  ScoringConfig cfg;
  std::string idf_path;
  std::string kb_path;
  std::string stoplist_path;
  std::string log_base;  // empty: use the model's base
  bool json = false;
  std::string manifest_path;

  void Register(CLI::App* cmd, bool with_k) {
    cmd->add_option("--idf", idf_path, "IDF model file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--kb", kb_path, "Knowledge base file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--stoplist", stoplist_path,
                    "Stopword list (default: built-in English list)")
        ->check(CLI::ExistingFile);
    if (with_k) {
      cmd->add_option("-k,--top-k", cfg.k, "Number of keyphrases")
          ->capture_default_str();
    }
    cmd->add_option("--alpha", cfg.alpha, "Weight of the PF*IDF score")
        ->capture_default_str();
    cmd->add_option("--tpos", cfg.t_pos, "Position threshold on chunks")
        ->capture_default_str();
    cmd->add_option("--max-len", cfg.limits.max_len, "Longest n-gram emitted")
        ->capture_default_str();
    cmd->add_option("--discard-over", cfg.limits.discard_over,
                    "Drop chunks longer than this many words")
        ->capture_default_str();
    cmd->add_option("--min-pf", cfg.min_pf,
                    "Keep candidates occurring at least this often")
        ->capture_default_str();
    cmd->add_option("--sim-floor", cfg.sim_floor,
                    "Keep rarer candidates whose domain score exceeds this")
        ->capture_default_str();
    cmd->add_option("--log-base", log_base,
                    "Logarithm base for IDF (default: the model's)")
        ->check(CLI::IsMember(kLogBaseNames));
    cmd->add_flag("--normalize", cfg.normalize,
                  "Scale both scores by their per-document maximum");
    cmd->add_flag("--json", json, "Emit JSON");
    cmd->add_option("--manifest", manifest_path, "Write a run manifest here");
  }
};

struct Resources {
  LoadedStopList stops;
  IdfModel model;
  KnowledgeBase kb;
  std::vector<InputDigest> inputs;
};

Resources LoadResources(const ScoringFlags& flags) {
  std::vector<InputDigest> inputs;
  IdfModel model = LoadModel<IdfModel>("idf", flags.idf_path, &inputs);
  if (!flags.log_base.empty()) {
    model = model.WithLogBase(*ParseLogBase(flags.log_base));
  }
  KnowledgeBase kb = LoadModel<KnowledgeBase>("kb", flags.kb_path, &inputs);
  LoadedStopList stops = LoadStopList(flags.stoplist_path);
  inputs.push_back(stops.digest);
  return {std::move(stops), std::move(model), std::move(kb), std::move(inputs)};
}

std::string FormatScore(double score) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << score;
  return out.str();
}

int BuildIdfCommand(const std::string& corpus_dir,
                    const std::string& stoplist_path, LogBase base,
                    const std::string& out_path, std::ostream& out) {
  const std::vector<std::string> files = ListFiles(corpus_dir, ".txt");
  if (files.empty()) throw DataError("no .txt files in " + corpus_dir);
  std::vector<std::string> corpus;
  corpus.reserve(files.size());
  for (const std::string& f : files) corpus.push_back(ReadFile(f));
  const LoadedStopList stops = LoadStopList(stoplist_path);
  const IdfModel model = BuildIdfParallel(corpus, stops.list, base);
  model.SaveFile(out_path);
  out << "N=" << model.n_docs() << " vocabulary=" << model.vocabulary_size()
      << '\n';
  return kExitOk;
}

int BuildKbCommand(const std::string& list_path, LogBase base,
                   const std::string& out_path, std::ostream& out) {
  const std::vector<Phrase> phrases = ReadKeyphraseListFile(list_path);
  if (phrases.empty()) throw DataError("keyphrase list is empty: " + list_path);
  const KnowledgeBase kb = KnowledgeBase::Build(phrases, base);
  kb.SaveFile(out_path);
  out << "keyphrases=" << phrases.size()
      << " keywords=" << kb.keywords().size()
      << " subphrases=" << kb.subphrases().size() << '\n';
  return kExitOk;
}

int ExtractCommand(const std::string& doc_path, const ScoringFlags& flags,
                   std::ostream& out) {
  flags.cfg.Validate();
  Resources res = LoadResources(flags);
  const std::string text = ReadFile(doc_path);
  res.inputs.push_back({"document", doc_path, Sha256Hex(text)});
  const std::vector<ScoredCandidate> top =
      ExtractTopK(text, res.stops.list, res.model, res.kb, flags.cfg);

  if (flags.json) {
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t i = 0; i < top.size(); ++i) {
      const ScoredCandidate& s = top[i];
      records.push_back({{"rank", i + 1},
                         {"key", s.key},
                         {"pf", s.pf},
                         {"plength", s.plength},
                         {"first_pos", s.first_pos},
                         {"score_pfidf", s.score_pfidf},
                         {"score_d", s.score_d},
                         {"score", s.score}});
    }
    out << records.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < top.size(); ++i) {
      out << (i + 1) << '\t' << top[i].key << '\t' << FormatScore(top[i].score)
          << '\n';
    }
  }

  if (!flags.manifest_path.empty()) {
    RunManifest manifest;
    manifest.command = "extract";
    manifest.config = flags.cfg;
    manifest.log_base = std::string(LogBaseName(res.model.log_base()));
    manifest.inputs = res.inputs;
    manifest.tool_version = KPX_VERSION;
    manifest.timestamp = UtcTimestamp();
    WriteTextFile(flags.manifest_path, manifest.ToJson());
  }
  return kExitOk;
}

std::set<std::string> ReadDocumentIds(const std::string& path) {
  std::istringstream in(ReadFile(path));
  std::set<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    ids.insert(DocumentId(line.substr(first, last - first + 1)));
  }
  return ids;
}

int EvaluateCommand(const std::string& corpus_dir, const std::string& gold_dir,
                    const std::string& k_list,
                    const std::string& kb_sources_path,
                    const ScoringFlags& flags, std::ostream& out,
                    std::ostream& err) {
  const std::vector<int> k_values = ParseKList(k_list);
  ScoringConfig cfg = flags.cfg;
  cfg.k = k_values.back();
  cfg.Validate();
  Resources res = LoadResources(flags);

  const std::vector<std::string> files = ListFiles(corpus_dir, ".txt");
  std::set<std::string> kb_sources;
  if (!kb_sources_path.empty()) kb_sources = ReadDocumentIds(kb_sources_path);

  std::vector<LabeledDocument> docs;
  for (const std::string& file : files) {
    const std::string id = DocumentId(file);
    if (kb_sources.count(id)) {
      throw DataError("test document " + id +
                      " also appears in the knowledge-base source list " +
                      kb_sources_path);
    }
    const std::string gold_path =
        (std::filesystem::path(gold_dir) / (id + ".key")).string();
    if (!std::filesystem::is_regular_file(gold_path)) {
      err << "warning: no gold file for " << id << "; skipped\n";
      continue;
    }
    LabeledDocument doc;
    doc.id = id;
    doc.text = ReadFile(file);
    doc.gold = GoldSet::LoadFile(id, gold_path);
    res.inputs.push_back({"document", file, Sha256Hex(doc.text)});
    docs.push_back(std::move(doc));
  }
  if (docs.empty()) throw DataError("no evaluable documents in " + corpus_dir);

  const EvalReport report =
      EvaluateCorpus(docs, res.stops.list, res.model, res.kb, cfg, k_values);
  for (const std::string& w : report.warnings) err << "warning: " << w << '\n';
  out << (flags.json ? ReportToJson(report) : FormatReport(report));

  if (!flags.manifest_path.empty()) {
    RunManifest manifest;
    manifest.command = "evaluate";
    manifest.config = cfg;
    manifest.log_base = std::string(LogBaseName(res.model.log_base()));
    manifest.k_values = k_values;
    manifest.inputs = res.inputs;
    manifest.tool_version = KPX_VERSION;
    manifest.timestamp = UtcTimestamp();
    WriteTextFile(flags.manifest_path, manifest.ToJson());
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Keyphrase extraction with PF*IDF and a domain glossary", "kpx"};
  app.require_subcommand(1);
  app.set_version_flag("--version", KPX_VERSION);

  std::string corpus_dir, gold_dir, out_path, stoplist_path, list_path,
      doc_path, kb_sources_path;
  std::string k_list = "5,10,15";
  std::string build_base = "e";

  CLI::App* build_idf =
      app.add_subcommand("build-idf", "Build a document-frequency model");
  build_idf->add_option("corpus_dir", corpus_dir, "Directory of .txt files")
      ->required();
  build_idf->add_option("-o,--out", out_path, "Output model file")->required();
  build_idf->add_option("--stoplist", stoplist_path, "Stopword list")
      ->check(CLI::ExistingFile);
  build_idf->add_option("--log-base", build_base, "Logarithm base")
      ->check(CLI::IsMember(kLogBaseNames))
      ->capture_default_str();

  CLI::App* build_kb =
      app.add_subcommand("build-kb", "Compile a keyphrase list into a KB");
  build_kb->add_option("keyphrase_list", list_path, "One keyphrase per line")
      ->required()
      ->check(CLI::ExistingFile);
  build_kb->add_option("-o,--out", out_path, "Output KB file")->required();
  build_kb->add_option("--log-base", build_base, "Logarithm base")
      ->check(CLI::IsMember(kLogBaseNames))
      ->capture_default_str();

  ScoringFlags extract_flags;
  CLI::App* extract =
      app.add_subcommand("extract", "Print the top-K keyphrases of a document");
  extract->add_option("document", doc_path, "Plain-text document")
      ->required()
      ->check(CLI::ExistingFile);
  extract_flags.Register(extract, /*with_k=*/true);

  ScoringFlags eval_flags;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Precision/recall against author-assigned keyphrases");
  evaluate->add_option("corpus_dir", corpus_dir, "Directory of <doc>.txt")
      ->required();
  evaluate->add_option("gold_dir", gold_dir, "Directory of <doc>.key")
      ->required();
  evaluate->add_option("--k-list", k_list, "Comma-separated K values")
      ->capture_default_str();
  evaluate->add_option("--kb-sources", kb_sources_path,
                       "Document ids the KB was built from; must not overlap")
      ->check(CLI::ExistingFile);
  eval_flags.Register(evaluate, /*with_k=*/false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const LogBase base = *ParseLogBase(build_base);
    if (*build_idf) {
      return BuildIdfCommand(corpus_dir, stoplist_path, base, out_path, out);
    }
    if (*build_kb) return BuildKbCommand(list_path, base, out_path, out);
    if (*extract) return ExtractCommand(doc_path, extract_flags, out);
    if (*evaluate) {
      return EvaluateCommand(corpus_dir, gold_dir, k_list, kb_sources_path,
                             eval_flags, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace kpx
