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

#include "kpx/scoring.h"

#include <algorithm>
#include <cmath>

#include "kpx/errors.h"

namespace kpx {

void ScoringConfig::Validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("alpha must be in [0, 1], got " + std::to_string(alpha));
  }
  if (t_pos < 1) {
    throw ConfigError("tpos must be at least 1, got " + std::to_string(t_pos));
  }
  if (k < 1) throw ConfigError("k must be at least 1, got " + std::to_string(k));
  if (min_pf < 1) {
    throw ConfigError("min-pf must be at least 1, got " +
                      std::to_string(min_pf));
  }
  if (std::isnan(sim_floor)) throw ConfigError("sim-floor must be a number");
  limits.Validate();
}

double ScorePfIdf(const Candidate& candidate, const IdfModel& model) {
  const auto pf = static_cast<double>(candidate.pf);
  if (candidate.length() == 1) return pf * model.Idf(candidate.words.front());
  return pf * Log(static_cast<double>(model.n_docs()), model.log_base());
}

double ScoreDomain(std::span<const std::string> words,
                   const KnowledgeBase& kb) {
  double score = 0.0;
  for (const std::string& word : words) score += kb.WeightOfKeyword(word);
  const std::size_t len = words.size();
  std::string key;
  for (std::size_t n = 2; n <= len; ++n) {
    for (std::size_t start = 0; start + n <= len; ++start) {
      key.clear();
      for (std::size_t i = start; i < start + n; ++i) {
        if (i != start) key.push_back(' ');
        key += words[i];
      }
      score += kb.WeightOfSubphrase(key);
    }
  }
  return score;
}

std::vector<ScoredCandidate> ScoreCandidates(const CandidateSet& set,
                                             const IdfModel& model,
                                             const KnowledgeBase& kb,
                                             const ScoringConfig& cfg) {
  std::vector<ScoredCandidate> scored;
  scored.reserve(set.size());
  for (const auto& [key, candidate] : set) {
    ScoredCandidate s;
    s.key = key;
    s.pf = candidate.pf;
    s.plength = static_cast<int>(candidate.length());
    s.first_pos = candidate.first_pos;
    s.score_pfidf = ScorePfIdf(candidate, model);
    s.score_d = ScoreDomain(candidate.words, kb);
    scored.push_back(std::move(s));
  }
  if (cfg.normalize) {
    double max_pfidf = 0.0;
    double max_d = 0.0;
    for (const ScoredCandidate& s : scored) {
      max_pfidf = std::max(max_pfidf, s.score_pfidf);
      max_d = std::max(max_d, s.score_d);
    }
    for (ScoredCandidate& s : scored) {
      if (max_pfidf > 0.0) s.score_pfidf /= max_pfidf;
      if (max_d > 0.0) s.score_d /= max_d;
    }
  }
  for (ScoredCandidate& s : scored) {
    s.score = Combine(s.score_pfidf, s.score_d, cfg.alpha);
  }
  return scored;
}

std::vector<ScoredCandidate> FilterByWeight(std::vector<ScoredCandidate> scored,
                                            const ScoringConfig& cfg) {
  std::erase_if(scored, [&](const ScoredCandidate& s) {
    return !(s.pf >= cfg.min_pf || s.score_d > cfg.sim_floor);
  });
  return scored;
}

bool RanksBefore(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.pf != b.pf) return a.pf > b.pf;
  if (a.first_pos != b.first_pos) return a.first_pos < b.first_pos;
  return a.key < b.key;
}

void SortByRank(std::vector<ScoredCandidate>& scored) {
  std::sort(scored.begin(), scored.end(), RanksBefore);
}

std::vector<ScoredCandidate> RankCandidates(std::string_view document,
                                            const StopList& stops,
                                            const IdfModel& model,
                                            const KnowledgeBase& kb,
                                            const ScoringConfig& cfg) {
  cfg.Validate();
  const std::vector<Token> tokens = Tokenize(document);
  const std::vector<Chunk> chunks = SplitChunks(tokens, stops);
  const CandidateSet candidates =
      FilterByPosition(CollectCandidates(chunks, cfg.limits), cfg.t_pos);
  std::vector<ScoredCandidate> ranked =
      FilterByWeight(ScoreCandidates(candidates, model, kb, cfg), cfg);
  SortByRank(ranked);
  return ranked;
}

std::vector<ScoredCandidate> ExtractTopK(std::string_view document,
                                         const StopList& stops,
                                         const IdfModel& model,
                                         const KnowledgeBase& kb,
                                         const ScoringConfig& cfg) {
  std::vector<ScoredCandidate> ranked =
      RankCandidates(document, stops, model, kb, cfg);
  if (ranked.size() > static_cast<std::size_t>(cfg.k)) ranked.resize(cfg.k);
  return ranked;
}

}  // namespace kpx
