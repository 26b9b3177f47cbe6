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

#include "kpx/candidates.h"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "kpx/errors.h"
#include "kpx/text.h"

namespace kpx {
namespace {

constexpr char kSampleSentence[] =
    "This study was one of the first to investigate potential risk factors "
    "for anxiety (i.e., behavioral inhibition, parental negative affect, "
    "parenting stress) in early childhood.";

StopList SampleStopList() {
  return StopList({"this", "was", "one", "of", "the", "first", "to", "for",
                   "i.e", "in", "early"},
                  "sample");
}

std::vector<std::string> Keys(const std::vector<std::vector<std::string>>& g) {
  std::vector<std::string> out;
  for (const auto& words : g) out.push_back(JoinWords(words));
  return out;
}

Chunk MakeChunk(const std::string& text, int position) {
  Chunk c;
  c.words = PhraseWords(text);
  c.position = position;
  return c;
}

TEST(SplitChunksTest, SampleSentence) {
  const auto chunks = SplitChunks(Tokenize(kSampleSentence), SampleStopList());
  const std::vector<std::string> expected = {
      "study", "investigate potential risk factors", "anxiety",
      "behavioral inhibition", "parental negative affect", "parenting stress",
      "childhood"};
  ASSERT_EQ(chunks.size(), expected.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    EXPECT_EQ(JoinWords(chunks[i].words), expected[i]);
    EXPECT_EQ(chunks[i].position, static_cast<int>(i) + 1);
  }
}

TEST(SplitChunksTest, AllStopwordsGiveNothing) {
  const StopList stops({"the", "of", "and"}, "t");
  EXPECT_TRUE(SplitChunks(Tokenize("the of and"), stops).empty());
}

TEST(SplitChunksTest, SingleWord) {
  const auto chunks = SplitChunks(Tokenize("anxiety"), StopList());
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_EQ(chunks[0], MakeChunk("anxiety", 1));
}

TEST(ExpandChunkTest, FourWordChunkStopsAtTrigrams) {
  const auto grams =
      ExpandChunk(MakeChunk("investigate potential risk factors", 2), {});
  EXPECT_EQ(Keys(grams),
            (std::vector<std::string>{
                "investigate", "potential", "risk", "factors",
                "investigate potential", "potential risk", "risk factors",
                "investigate potential risk", "potential risk factors"}));
}

TEST(ExpandChunkTest, OverlongChunkDiscarded) {
  EXPECT_TRUE(ExpandChunk(MakeChunk("a b c d e f", 1), {}).empty());
  // Five words is still allowed.
  EXPECT_EQ(ExpandChunk(MakeChunk("a b c d e", 1), {}).size(), 5u + 4u + 3u);
}

TEST(ExpandChunkTest, SingleWord) {
  EXPECT_EQ(Keys(ExpandChunk(MakeChunk("anxiety", 1), {})),
            (std::vector<std::string>{"anxiety"}));
}

// Count matches sum_{n=1..min(L,max_len)} (L-n+1) and the grams equal a
// brute-force enumeration of contiguous runs.
TEST(ExpandChunkTest, MatchesBruteForceEnumeration) {
  std::mt19937 rng(7);
  for (int len = 1; len <= 8; ++len) {
    for (int max_len = 1; max_len <= 5; ++max_len) {
      for (int discard_over = max_len; discard_over <= 7; ++discard_over) {
        Chunk chunk;
        chunk.position = 1;
        for (int i = 0; i < len; ++i) {
          chunk.words.push_back("w" + std::to_string(rng() % 4));
        }
        const auto grams = ExpandChunk(chunk, {max_len, discard_over});
        std::multiset<std::string> brute;
        if (len <= discard_over) {
          for (int i = 0; i < len; ++i) {
            for (int j = i + 1; j <= len && j - i <= max_len; ++j) {
              brute.insert(JoinWords(std::vector<std::string>(
                  chunk.words.begin() + i, chunk.words.begin() + j)));
            }
          }
        }
        std::size_t expected_count = 0;
        if (len <= discard_over) {
          for (int n = 1; n <= std::min(len, max_len); ++n) {
            expected_count += len - n + 1;
          }
        }
        const auto keys = Keys(grams);
        EXPECT_EQ(keys.size(), expected_count);
        EXPECT_EQ(std::multiset<std::string>(keys.begin(), keys.end()), brute);
        for (std::size_t i = 1; i < grams.size(); ++i) {
          EXPECT_LE(grams[i - 1].size(), grams[i].size());
        }
      }
    }
  }
}

TEST(NgramLimitsTest, Validate) {
  EXPECT_NO_THROW((NgramLimits{3, 5}.Validate()));
  EXPECT_THROW((NgramLimits{0, 5}.Validate()), ConfigError);
  EXPECT_THROW((NgramLimits{4, 3}.Validate()), ConfigError);
}

TEST(CollectCandidatesTest, SampleSentenceHas24Candidates) {
  const auto chunks = SplitChunks(Tokenize(kSampleSentence), SampleStopList());
  const CandidateSet set = CollectCandidates(chunks, {});
  const std::set<std::string> expected = {
      "study", "investigate", "potential", "risk", "factors",
      "investigate potential", "potential risk", "risk factors",
      "investigate potential risk", "potential risk factors", "anxiety",
      "behavioral inhibition", "behavioral", "inhibition",
      "parental negative affect", "parental", "negative", "affect",
      "parental negative", "negative affect", "parenting stress",
      "parenting", "stress", "childhood"};
  std::set<std::string> got;
  for (const auto& [key, c] : set) {
    got.insert(key);
    EXPECT_EQ(c.pf, 1) << key;
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(set.at("childhood").first_pos, 7);
  EXPECT_EQ(set.at("risk factors").first_pos, 2);
}

TEST(CollectCandidatesTest, DuplicateChunksAggregate) {
  const std::vector<Chunk> chunks = {MakeChunk("risk", 1), MakeChunk("risk", 2)};
  const CandidateSet set = CollectCandidates(chunks, {});
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.at("risk").pf, 2);
  EXPECT_EQ(set.at("risk").first_pos, 1);
}

TEST(CollectCandidatesTest, OverlappingChunks) {
  const std::vector<Chunk> chunks = {MakeChunk("a b", 1), MakeChunk("b c", 2)};
  const CandidateSet set = CollectCandidates(chunks, {});
  EXPECT_EQ(set.size(), 5u);
  EXPECT_EQ(set.at("b").pf, 2);
  EXPECT_EQ(set.at("b").first_pos, 1);
  EXPECT_EQ(set.at("a b").pf, 1);
  EXPECT_EQ(set.at("b c").pf, 1);
  EXPECT_EQ(set.at("c").first_pos, 2);
}

TEST(CollectCandidatesTest, IndependentOfChunkOrder) {
  std::vector<Chunk> chunks = {MakeChunk("a b c", 1), MakeChunk("b c", 2),
                               MakeChunk("c a", 3), MakeChunk("a", 4),
                               MakeChunk("b c d e", 5)};
  const CandidateSet reference = CollectCandidates(chunks, {});
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(chunks.begin(), chunks.end(), rng);
    EXPECT_EQ(CollectCandidates(chunks, {}), reference);
  }
}

TEST(CollectCandidatesTest, NoCandidateContainsABoundary) {
  const StopList& stops = StopList::Default();
  const std::string text =
      "The patients with chronic renal failure were treated in the hospital; "
      "mortality was 12% (n = 40) and the risk of infection, as shown, rose.";
  const CandidateSet set =
      CollectCandidates(SplitChunks(Tokenize(text), stops), {});
  ASSERT_FALSE(set.empty());
  for (const auto& [key, c] : set) {
    for (const std::string& w : c.words) {
      for (const Token& t : Tokenize(w)) {
        EXPECT_FALSE(IsBoundary(t, stops)) << key;
      }
    }
    EXPECT_GE(c.pf, 1);
    EXPECT_GE(c.first_pos, 1);
    EXPECT_LE(c.length(), 3u);
  }
}

TEST(FilterByPositionTest, ThresholdIsInclusive) {
  CandidateSet set;
  set["late"] = Candidate{{"late"}, 1, 121};
  set["edge"] = Candidate{{"edge"}, 1, 120};
  set["early"] = Candidate{{"early"}, 3, 1};
  const CandidateSet kept = FilterByPosition(set, 120);
  EXPECT_EQ(kept.size(), 2u);
  EXPECT_FALSE(kept.contains("late"));
  EXPECT_TRUE(kept.contains("edge"));
}

TEST(FilterByPositionTest, IdentityAndIdempotence) {
  const auto chunks = SplitChunks(Tokenize(kSampleSentence), SampleStopList());
  const CandidateSet set = CollectCandidates(chunks, {});
  EXPECT_EQ(FilterByPosition(set, static_cast<int>(chunks.size())), set);
  EXPECT_EQ(FilterByPosition(set, std::numeric_limits<int>::max()), set);
  const CandidateSet once = FilterByPosition(set, 3);
  EXPECT_EQ(FilterByPosition(once, 3), once);
  for (const auto& [key, c] : once) EXPECT_LE(c.first_pos, 3);
}

}  // namespace
}  // namespace kpx
