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

#include "kpx/idf_model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "kpx/errors.h"

namespace kpx {
namespace {

TEST(BuildIdfTest, HandCount) {
  const std::vector<std::string> corpus = {"anxiety anxiety", "anxiety stress"};
  const IdfModel model = BuildIdf(corpus, StopList());
  EXPECT_EQ(model.n_docs(), 2);
  EXPECT_EQ(model.DocFreq("anxiety"), 2);
  EXPECT_EQ(model.DocFreq("stress"), 1);
  EXPECT_EQ(model.vocabulary_size(), 2u);
  EXPECT_EQ(model.Idf("anxiety"), 0.0);  // DF = N
}

TEST(BuildIdfTest, WordInOneOfThreeDocuments) {
  const std::vector<std::string> corpus = {"renal failure", "cardiac surgery",
                                           "renal cardiac"};
  const IdfModel model = BuildIdf(corpus, StopList());
  EXPECT_EQ(model.DocFreq("failure"), 1);
  EXPECT_NEAR(model.Idf("failure"), 1.0986122886681098, 1e-15);
}

TEST(BuildIdfTest, SkipsBoundaryTokensAndFoldsCase) {
  const StopList stops({"the"}, "t");
  const IdfModel model =
      BuildIdf(std::vector<std::string>{"The Heart, 42 heart."}, stops);
  EXPECT_EQ(model.vocabulary_size(), 1u);
  EXPECT_EQ(model.DocFreq("heart"), 1);
  EXPECT_EQ(model.DocFreq("the"), 0);
  EXPECT_EQ(model.DocFreq("42"), 0);
}

TEST(BuildIdfTest, EmptyCorpusIsConfigError) {
  EXPECT_THROW(BuildIdf(std::vector<std::string>{}, StopList()), ConfigError);
}

TEST(BuildIdfTest, IndependentOfDocumentOrder) {
  std::vector<std::string> corpus = {"a b c", "b c d", "c d e", "a e", "f"};
  const IdfModel reference = BuildIdf(corpus, StopList());
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(corpus.begin(), corpus.end(), rng);
    EXPECT_EQ(BuildIdf(corpus, StopList()), reference);
  }
}

TEST(IdfTest, Examples) {
  const IdfModel model(100, {{"common", 10}, {"everywhere", 100}});
  EXPECT_NEAR(model.Idf("common"), 2.302585092994046, 1e-15);
  EXPECT_EQ(model.Idf("everywhere"), 0.0);
  EXPECT_NEAR(model.Idf("unseen"), 4.605170185988092, 1e-15);
}

TEST(IdfTest, LogBases) {
  const IdfModel model(100, {{"w", 10}});
  EXPECT_DOUBLE_EQ(model.WithLogBase(LogBase::k10).Idf("w"), 1.0);
  EXPECT_NEAR(model.WithLogBase(LogBase::k2).Idf("w"), std::log2(10.0), 1e-15);
  EXPECT_EQ(ParseLogBase("10"), LogBase::k10);
  EXPECT_EQ(ParseLogBase("x"), std::nullopt);
  EXPECT_EQ(LogBaseName(LogBase::k2), "2");
}

TEST(IdfTest, MonotoneNonNegativeZeroOnlyAtN) {
  const std::int64_t n = 50;
  IdfModel::DocFreqTable df;
  for (std::int64_t d = 1; d <= n; ++d) df["w" + std::to_string(d)] = d;
  const IdfModel model(n, df);
  double previous = std::numeric_limits<double>::infinity();
  for (std::int64_t d = 1; d <= n; ++d) {
    const double idf = model.Idf("w" + std::to_string(d));
    EXPECT_GE(idf, 0.0);
    EXPECT_LE(idf, previous);
    EXPECT_EQ(idf == 0.0, d == n);
    previous = idf;
  }
}

TEST(IdfModelTest, RejectsInconsistentCounts) {
  EXPECT_THROW(IdfModel(0, {}), DataError);
  EXPECT_THROW(IdfModel(2, {{"w", 3}}), DataError);
  EXPECT_THROW(IdfModel(2, {{"w", 0}}), DataError);
}

TEST(IdfModelTest, SerializationRoundTrip) {
  const IdfModel model(
      7, {{"anxiety", 3}, {"zeta", 1}, {"ménière", 2}, {"stress", 7}},
      LogBase::k2);
  std::ostringstream out;
  model.Save(out);
  EXPECT_EQ(out.str().substr(0, 14), "N\t7\nLOGBASE\t2\n");
  std::istringstream in(out.str());
  const IdfModel loaded = IdfModel::Load(in, "mem");
  EXPECT_EQ(loaded, model);
  for (const auto& [word, df] : model.doc_freqs()) {
    EXPECT_EQ(loaded.Idf(word), model.Idf(word));  // bit-exact
  }
}

TEST(IdfModelTest, LoadNamesOffendingLine) {
  auto load_error = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      IdfModel::Load(in, "model.tsv");
    } catch (const DataError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_EQ(load_error("N\tx\n"), "model.tsv:1: N must be a positive integer");
  EXPECT_NE(load_error("N\t3\nBASE\te\n").find("model.tsv:2:"),
            std::string::npos);
  EXPECT_NE(load_error("N\t3\nLOGBASE\te\na\t1\nb\t4\n").find("model.tsv:4:"),
            std::string::npos);
  EXPECT_NE(load_error("N\t3\nLOGBASE\te\nb\t1\na\t1\n").find("sorted"),
            std::string::npos);
  EXPECT_NE(load_error("N\t3\nLOGBASE\te\nnotab\n").find("model.tsv:3:"),
            std::string::npos);
  EXPECT_EQ(load_error("N\t3\nLOGBASE\t10\na\t1\n"), "");
}

}  // namespace
}  // namespace kpx
