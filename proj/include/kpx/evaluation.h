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

#ifndef KPX_EVALUATION_H_
#define KPX_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kpx {

// Porter stems of each word, joined by single spaces.
std::string StemPhrase(std::span<const std::string> words);
// Tokenizes and lowercases `phrase` first.
std::string StemPhrase(std::string_view phrase);

// Author-assigned keyphrases of one document.
struct GoldSet {
  std::string doc_id;
  std::vector<std::string> keys;    // normalized, in file order
  std::set<std::string> stem_keys;  // StemPhrase of each key

  static GoldSet FromPhrases(std::string doc_id,
                             std::span<const std::string> phrases);
  // One keyphrase per line; blank lines ignored.
  static GoldSet LoadFile(std::string doc_id, const std::string& path);

  bool empty() const { return stem_keys.empty(); }
};

// |stems(extracted) ∩ stems(gold)|: duplicate extracted stems count once.
std::size_t MatchCount(std::span<const std::string> extracted,
                       const GoldSet& gold);

struct DocMetrics {
  double precision = 0.0;  // matches / |extracted|, 0 when nothing extracted
  double recall = 0.0;     // matches / |gold|
  std::size_t keys_matched = 0;
  std::size_t extracted = 0;

  bool operator==(const DocMetrics&) const = default;
};

// nullopt for an empty gold set (recall undefined). Throws
// std::invalid_argument when more than k phrases are supplied.
std::optional<DocMetrics> ComputeDocMetrics(
    std::span<const std::string> extracted, const GoldSet& gold, int k);

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1 denominator)
};

// SD is 0 for fewer than two values; mean is 0 for none.
MeanSd SampleMeanSd(std::span<const double> values);

struct DocEvaluation {
  std::string doc_id;
  std::size_t gold_size = 0;
  std::vector<std::string> extracted;  // ranked, up to max K
  std::vector<int> k_values;
  std::vector<DocMetrics> per_k;       // parallel to k_values
};

// Scores the ranked list at each K (prefixes of `ranked`). nullopt when the
// gold set is empty.
std::optional<DocEvaluation> EvaluateDocument(
    const GoldSet& gold, std::span<const std::string> ranked,
    std::span<const int> k_values);

struct ReportRow {
  int k = 0;
  MeanSd avg_keys;
  MeanSd precision;
  MeanSd recall;
};

struct EvalReport {
  std::vector<ReportRow> rows;
  std::size_t n_docs = 0;
  double avg_gold_keys = 0.0;
  std::vector<std::string> warnings;
  std::vector<DocEvaluation> docs;  // sorted by doc_id
};

// Mean and sample SD across documents at each K. Throws
// std::invalid_argument when `docs` is empty or K values mismatch.
EvalReport Aggregate(std::vector<DocEvaluation> docs,
                     std::span<const int> k_values);

// Aligned text: the per-K summary table followed by per-document rows.
std::string FormatReport(const EvalReport& report);
std::string ReportToJson(const EvalReport& report);

// Parses "5,10,15". Throws ConfigError on anything but positive integers.
std::vector<int> ParseKList(std::string_view list);

}  // namespace kpx

#endif  // KPX_EVALUATION_H_
