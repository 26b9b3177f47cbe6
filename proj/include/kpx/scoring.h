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

#ifndef KPX_SCORING_H_
#define KPX_SCORING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/candidates.h"
#include "kpx/idf_model.h"
#include "kpx/knowledge_base.h"
#include "kpx/text.h"

namespace kpx {

struct ScoringConfig {
  double alpha = 0.6;
  int t_pos = 120;
  int k = 10;
  NgramLimits limits;
  std::int64_t min_pf = 2;
  // Candidates with pf < min_pf survive only if score_d > sim_floor.
  double sim_floor = 0.0;
  // Divide each component score by its per-document maximum before blending.
  bool normalize = false;

  // Throws ConfigError on out-of-range values.
  void Validate() const;
};

struct ScoredCandidate {
  std::string key;
  std::int64_t pf = 0;
  int plength = 0;
  int first_pos = 0;
  double score_pfidf = 0.0;
  double score_d = 0.0;
  double score = 0.0;

  bool operator==(const ScoredCandidate&) const = default;
};

// PF * IDF for single words, PF * log(N) for longer phrases.
double ScorePfIdf(const Candidate& candidate, const IdfModel& model);

// Keyword weights of every word plus sub-phrase weights of every contiguous
// n-gram with n >= 2, the candidate itself included.
double ScoreDomain(std::span<const std::string> words, const KnowledgeBase& kb);

inline double Combine(double score_pfidf, double score_d, double alpha) {
  return alpha * score_pfidf + (1.0 - alpha) * score_d;
}

// Scores every candidate in the set (map order).
std::vector<ScoredCandidate> ScoreCandidates(const CandidateSet& set,
                                             const IdfModel& model,
                                             const KnowledgeBase& kb,
                                             const ScoringConfig& cfg);

// Keeps candidates with pf >= min_pf or score_d > sim_floor.
std::vector<ScoredCandidate> FilterByWeight(
    std::vector<ScoredCandidate> scored, const ScoringConfig& cfg);

// Strict weak order: higher score, then higher pf, then earlier first_pos,
// then smaller key.
bool RanksBefore(const ScoredCandidate& a, const ScoredCandidate& b);

void SortByRank(std::vector<ScoredCandidate>& scored);

// Full pipeline without the final cut: every surviving candidate in rank
// order.
std::vector<ScoredCandidate> RankCandidates(std::string_view document,
                                            const StopList& stops,
                                            const IdfModel& model,
                                            const KnowledgeBase& kb,
                                            const ScoringConfig& cfg);

// The first cfg.k entries of RankCandidates.
std::vector<ScoredCandidate> ExtractTopK(std::string_view document,
                                         const StopList& stops,
                                         const IdfModel& model,
                                         const KnowledgeBase& kb,
                                         const ScoringConfig& cfg);

}  // namespace kpx

#endif  // KPX_SCORING_H_
