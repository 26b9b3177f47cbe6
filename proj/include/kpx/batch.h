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

#ifndef KPX_BATCH_H_
#define KPX_BATCH_H_

#include <span>
#include <string>
#include <vector>

#include "kpx/evaluation.h"
#include "kpx/idf_model.h"
#include "kpx/knowledge_base.h"
#include "kpx/scoring.h"
#include "kpx/text.h"

// Per-document data-parallel kernels. Each has a serial counterpart that
// defines the expected output; results are identical regardless of thread
// count or scheduling.
namespace kpx {

// OpenMP build: per-document vocabularies in parallel, then a serial merge.
// Equal to BuildIdf.
IdfModel BuildIdfParallel(std::span<const std::string> corpus,
                          const StopList& stops, LogBase base = LogBase::kE);

using RankedList = std::vector<ScoredCandidate>;

// ExtractTopK over every document, in input order.
std::vector<RankedList> ExtractBatchSerial(std::span<const std::string> docs,
                                           const StopList& stops,
                                           const IdfModel& model,
                                           const KnowledgeBase& kb,
                                           const ScoringConfig& cfg);
std::vector<RankedList> ExtractBatch(std::span<const std::string> docs,
                                     const StopList& stops,
                                     const IdfModel& model,
                                     const KnowledgeBase& kb,
                                     const ScoringConfig& cfg);

struct LabeledDocument {
  std::string id;
  std::string text;
  GoldSet gold;
};

// Extracts max(k_values) phrases per document with `cfg` (its k is
// ignored) and aggregates precision/recall at each K. Documents with empty
// gold sets are skipped with a warning. Throws DataError when nothing is
// left to evaluate.
EvalReport EvaluateCorpus(std::span<const LabeledDocument> docs,
                          const StopList& stops, const IdfModel& model,
                          const KnowledgeBase& kb, const ScoringConfig& cfg,
                          std::span<const int> k_values, bool parallel = true);

}  // namespace kpx

#endif  // KPX_BATCH_H_
