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

#include "kpx/batch.h"

#include <algorithm>
#include <exception>
#include <optional>

#include <omp.h>

#include "kpx/errors.h"

namespace kpx {

namespace {

// Runs body(i) for i in [0, n) across OpenMP threads. The first exception
// thrown by any iteration is rethrown on the calling thread.
template <typename Body>
void ParallelFor(std::size_t n, Body body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(kpx_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

IdfModel BuildIdfParallel(std::span<const std::string> corpus,
                          const StopList& stops, LogBase base) {
  if (corpus.empty()) throw ConfigError("cannot build IDF from an empty corpus");
  std::vector<std::vector<std::string>> vocabularies(corpus.size());
  ParallelFor(corpus.size(), [&](std::size_t i) {
    vocabularies[i] = DocumentVocabulary(corpus[i], stops);
  });
  IdfModel::DocFreqTable df;
  for (auto& vocabulary : vocabularies) {
    for (std::string& word : vocabulary) ++df[std::move(word)];
  }
  return IdfModel(static_cast<std::int64_t>(corpus.size()), std::move(df),
                  base);
}

std::vector<RankedList> ExtractBatchSerial(std::span<const std::string> docs,
                                           const StopList& stops,
                                           const IdfModel& model,
                                           const KnowledgeBase& kb,
                                           const ScoringConfig& cfg) {
  cfg.Validate();
  std::vector<RankedList> out;
  out.reserve(docs.size());
  for (const std::string& doc : docs) {
    out.push_back(ExtractTopK(doc, stops, model, kb, cfg));
  }
  return out;
}

std::vector<RankedList> ExtractBatch(std::span<const std::string> docs,
                                     const StopList& stops,
                                     const IdfModel& model,
                                     const KnowledgeBase& kb,
                                     const ScoringConfig& cfg) {
  cfg.Validate();
  std::vector<RankedList> out(docs.size());
  ParallelFor(docs.size(), [&](std::size_t i) {
    out[i] = ExtractTopK(docs[i], stops, model, kb, cfg);
  });
  return out;
}

EvalReport EvaluateCorpus(std::span<const LabeledDocument> docs,
                          const StopList& stops, const IdfModel& model,
                          const KnowledgeBase& kb, const ScoringConfig& cfg,
                          std::span<const int> k_values, bool parallel) {
  if (k_values.empty()) throw ConfigError("no K values to evaluate");
  ScoringConfig run = cfg;
  run.k = *std::max_element(k_values.begin(), k_values.end());
  run.Validate();

  std::vector<std::string> texts;
  texts.reserve(docs.size());
  for (const LabeledDocument& d : docs) texts.push_back(d.text);
  const std::vector<RankedList> ranked =
      parallel ? ExtractBatch(texts, stops, model, kb, run)
               : ExtractBatchSerial(texts, stops, model, kb, run);

  std::vector<std::string> warnings;
  std::vector<DocEvaluation> evaluated;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::vector<std::string> keys;
    keys.reserve(ranked[i].size());
    for (const ScoredCandidate& s : ranked[i]) keys.push_back(s.key);
    std::optional<DocEvaluation> eval =
        EvaluateDocument(docs[i].gold, keys, k_values);
    if (!eval) {
      warnings.push_back("document " + docs[i].id +
                         " has no gold keyphrases; excluded");
      continue;
    }
    eval->doc_id = docs[i].id;
    evaluated.push_back(std::move(*eval));
  }
  if (evaluated.empty()) throw DataError("no evaluable documents");
  EvalReport report = Aggregate(std::move(evaluated), k_values);
  report.warnings.insert(report.warnings.begin(), warnings.begin(),
                         warnings.end());
  return report;
}

}  // namespace kpx
