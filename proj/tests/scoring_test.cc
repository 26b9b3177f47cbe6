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
#include <random>

#include "gtest/gtest.h"
#include "kpx/errors.h"
#include "oracle.h"

namespace kpx {
namespace {

Candidate MakeCandidate(const std::string& text, std::int64_t pf,
                        int first_pos = 1) {
  return Candidate{PhraseWords(text), pf, first_pos};
}

TEST(ScorePfIdfTest, Examples) {
  const IdfModel model(100, {{"anxiety", 10}, {"common", 100}});
  EXPECT_NEAR(ScorePfIdf(MakeCandidate("anxiety", 3), model),
              6.907755278982137, 1e-12);
  EXPECT_EQ(ScorePfIdf(MakeCandidate("common", 7), model), 0.0);
  EXPECT_NEAR(ScorePfIdf(MakeCandidate("risk factors", 2), model),
              9.210340371976184, 1e-12);
  // Multi-word phrases ignore DF entirely.
  EXPECT_EQ(ScorePfIdf(MakeCandidate("common anxiety", 1), model),
            std::log(100.0));
}

TEST(ScoreDomainTest, Examples) {
  KnowledgeBase::KeywordTable keywords = {{"risk", {0, 3, 0.8}},
                                          {"factors", {0, 4, 0.5}},
                                          {"anxiety", {2, 0, 1.0}}};
  const KnowledgeBase kb(keywords, {{"risk factors", 1.3}});
  EXPECT_NEAR(ScoreDomain(PhraseWords("risk factors"), kb), 2.6, 1e-12);
  EXPECT_EQ(ScoreDomain(PhraseWords("cardiac surgery"), kb), 0.0);
  EXPECT_EQ(ScoreDomain(PhraseWords("anxiety"), kb), 1.0);
}

TEST(ScoreDomainTest, CountsEveryContiguousSubphrase) {
  const KnowledgeBase kb = KnowledgeBase::Build(
      std::vector<Phrase>{PhraseWords("parental negative affect")});
  // 3 keywords at 1.0, "parental negative" 2, "negative affect" 2, full 3.
  EXPECT_EQ(ScoreDomain(PhraseWords("parental negative affect"), kb), 10.0);
  EXPECT_EQ(ScoreDomain(PhraseWords("negative affect"), kb), 4.0);
  // "parental affect" is not contiguous in the listed phrase.
  EXPECT_EQ(ScoreDomain(PhraseWords("parental affect"), kb), 2.0);
}

TEST(CombineTest, Examples) {
  EXPECT_NEAR(Combine(9.2103, 2.6, 0.6), 6.56618, 1e-12);
  EXPECT_EQ(Combine(9.2103, 2.6, 1.0), 9.2103);
  EXPECT_EQ(Combine(9.2103, 2.6, 0.0), 2.6);
}

TEST(FilterByWeightTest, Disjunction) {
  ScoringConfig cfg;
  std::vector<ScoredCandidate> scored = {
      {"frequent", 2, 1, 1, 0.0, 0.0, 0.0},
      {"rare", 1, 1, 1, 0.0, 0.0, 0.0},
      {"known", 1, 1, 1, 0.0, 0.7, 0.0},
  };
  const auto kept = FilterByWeight(scored, cfg);
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0].key, "frequent");
  EXPECT_EQ(kept[1].key, "known");

  cfg.sim_floor = 0.7;  // exclusive threshold
  EXPECT_EQ(FilterByWeight(scored, cfg).size(), 1u);
  cfg.sim_floor = -1.0;
  EXPECT_EQ(FilterByWeight(scored, cfg).size(), 3u);
}

TEST(RankTest, TieBreaks) {
  std::vector<ScoredCandidate> v = {
      {"b", 1, 1, 3, 0, 0, 1.0}, {"a", 1, 1, 3, 0, 0, 1.0},
      {"c", 1, 1, 1, 0, 0, 1.0}, {"d", 5, 1, 9, 0, 0, 1.0},
      {"e", 1, 1, 1, 0, 0, 2.0}};
  SortByRank(v);
  std::vector<std::string> keys;
  for (const auto& s : v) keys.push_back(s.key);
  EXPECT_EQ(keys, (std::vector<std::string>{"e", "d", "c", "a", "b"}));
}

TEST(ScoringConfigTest, Validate) {
  ScoringConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  EXPECT_EQ(cfg.alpha, 0.6);
  EXPECT_EQ(cfg.t_pos, 120);
  EXPECT_EQ(cfg.min_pf, 2);
  cfg.alpha = 1.5;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = ScoringConfig();
  cfg.k = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = ScoringConfig();
  cfg.t_pos = 0;
  EXPECT_THROW(cfg.Validate(), ConfigError);
  cfg = ScoringConfig();
  cfg.limits.discard_over = 2;
  EXPECT_THROW(cfg.Validate(), ConfigError);
}

class ExtractTest : public ::testing::Test {
 protected:
  ExtractTest()
      : stops_({"the", "of", "and", "in", "to", "with", "was", "for", "a", "is"},
               "test"),
        model_(BuildIdf(Corpus(), stops_)),
        kb_(KnowledgeBase::Build(std::vector<Phrase>{
            PhraseWords("risk factors"), PhraseWords("anxiety"),
            PhraseWords("parenting stress")})) {}

  static std::vector<std::string> Corpus() {
    return {"anxiety and stress in children",
            "cardiac surgery outcome with risk of infection",
            "blood pressure and renal failure in heart disease",
            "the risk factors of renal failure"};
  }

  StopList stops_;
  IdfModel model_;
  KnowledgeBase kb_;
};

TEST_F(ExtractTest, EmptyDocument) {
  EXPECT_TRUE(ExtractTopK("", stops_, model_, kb_, ScoringConfig()).empty());
}

TEST_F(ExtractTest, KLargerThanPoolReturnsAllSurvivors) {
  ScoringConfig cfg;
  cfg.k = 1000;
  const std::string doc = "risk factors for anxiety , risk factors , stress";
  const auto all = RankCandidates(doc, stops_, model_, kb_, cfg);
  EXPECT_EQ(ExtractTopK(doc, stops_, model_, kb_, cfg), all);
  cfg.k = 2;
  EXPECT_EQ(ExtractTopK(doc, stops_, model_, kb_, cfg).size(), 2u);
}

TEST_F(ExtractTest, StoredScoreIsTheBlend) {
  ScoringConfig cfg;
  cfg.min_pf = 1;
  for (const auto& s : RankCandidates(
           "risk factors of anxiety in parenting stress . cardiac surgery",
           stops_, model_, kb_, cfg)) {
    EXPECT_EQ(s.score, Combine(s.score_pfidf, s.score_d, cfg.alpha));
  }
}

TEST_F(ExtractTest, PlantedRepeatedBigramRanksFirst) {
  // "renal failure" repeats three times; its PF*log(N) term dominates.
  const std::string doc =
      "renal failure in cardiac surgery , renal failure . blood pressure ; "
      "renal failure with heart disease";
  const auto top = ExtractTopK(doc, stops_, model_, kb_, ScoringConfig());
  ASSERT_FALSE(top.empty());
  EXPECT_EQ(top[0].key, "renal failure");
  EXPECT_EQ(top[0].pf, 3);
}

TEST_F(ExtractTest, AlphaOneIsPfIdfRanking) {
  ScoringConfig cfg;
  cfg.alpha = 1.0;
  cfg.min_pf = 1;
  cfg.k = 50;
  const std::string doc =
      "risk factors of anxiety , parenting stress , anxiety , cardiac risk";
  const auto ranked = RankCandidates(doc, stops_, model_, kb_, cfg);
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].score_pfidf, ranked[i].score_pfidf);
  }
  cfg.alpha = 0.0;
  const auto by_domain = RankCandidates(doc, stops_, model_, kb_, cfg);
  for (std::size_t i = 1; i < by_domain.size(); ++i) {
    EXPECT_GE(by_domain[i - 1].score_d, by_domain[i].score_d);
  }
}

TEST_F(ExtractTest, NormalizeScalesComponentsToUnitMax) {
  ScoringConfig cfg;
  cfg.normalize = true;
  cfg.min_pf = 1;
  cfg.k = 100;
  const auto ranked = RankCandidates(
      "risk factors of anxiety , parenting stress , anxiety , cardiac risk",
      stops_, model_, kb_, cfg);
  double max_p = 0, max_d = 0;
  for (const auto& s : ranked) {
    max_p = std::max(max_p, s.score_pfidf);
    max_d = std::max(max_d, s.score_d);
  }
  EXPECT_EQ(max_p, 1.0);
  EXPECT_EQ(max_d, 1.0);
}

// Scaling both component scores by the same power of two preserves the
// ranking.
TEST(RankPropertyTest, ScaleInvariance) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> score(0.0, 10.0);
  std::uniform_int_distribution<int> pf(1, 5);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<ScoredCandidate> v;
    for (int i = 0; i < 30; ++i) {
      ScoredCandidate s;
      s.key = "c" + std::to_string(i);
      s.pf = pf(rng);
      s.plength = 1;
      s.first_pos = i + 1;
      s.score_pfidf = score(rng);
      s.score_d = score(rng);
      s.score = Combine(s.score_pfidf, s.score_d, 0.6);
      v.push_back(s);
    }
    auto ranked = v;
    SortByRank(ranked);

    const double c = std::ldexp(1.0, 1 + iter % 4);  // exact scaling
    auto scaled = v;
    for (auto& s : scaled) {
      s.score_pfidf *= c;
      s.score_d *= c;
      s.score = Combine(s.score_pfidf, s.score_d, 0.6);
    }
    SortByRank(scaled);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      ASSERT_EQ(ranked[i].key, scaled[i].key);
    }
  }
}

TEST_F(ExtractTest, IncreasingPfNeverLowersRank) {
  ScoringConfig cfg;
  cfg.min_pf = 1;
  cfg.k = 100;
  std::string doc = "cardiac surgery , blood pressure , anxiety , heart disease";
  auto rank_of = [&](const std::string& key) {
    const auto ranked = RankCandidates(doc, stops_, model_, kb_, cfg);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      if (ranked[i].key == key) return i;
    }
    return ranked.size();
  };
  std::size_t previous = rank_of("blood pressure");
  for (int i = 0; i < 4; ++i) {
    doc += " , blood pressure";
    const std::size_t now = rank_of("blood pressure");
    EXPECT_LE(now, previous);
    previous = now;
  }
}

}  // namespace
}  // namespace kpx
