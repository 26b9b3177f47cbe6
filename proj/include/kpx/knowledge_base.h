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

#ifndef KPX_KNOWLEDGE_BASE_H_
#define KPX_KNOWLEDGE_BASE_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/idf_model.h"

namespace kpx {

// One keyphrase as lowercase words.
using Phrase = std::vector<std::string>;

// Reads one keyphrase per line. Blank lines and lines without any word are
// skipped; duplicates are kept.
std::vector<Phrase> ReadKeyphraseList(std::istream& in);
std::vector<Phrase> ReadKeyphraseListFile(const std::string& path);

struct KeywordCounts {
  std::int64_t alone = 0;  // single-word keyphrases equal to the word
  std::int64_t part = 0;   // occurrences inside multi-word keyphrases

  bool operator==(const KeywordCounts&) const = default;
};

using KeywordCountTable = std::map<std::string, KeywordCounts, std::less<>>;

KeywordCountTable CountModes(std::span<const Phrase> phrases);

// Domain weight of a keyword from how it occurs in the keyphrase list:
//   alone only     1
//   part only      1 / log(c)
//   both           0.5 * (1 + 1 / log(c))
// where c = part. Results above 1 (including the c = 1 pole) clamp to 1.
// Throws std::invalid_argument when alone + part == 0.
double KeywordWeight(std::int64_t alone, std::int64_t part,
                     LogBase base = LogBase::kE);

struct KeywordRow {
  std::int64_t alone = 0;
  std::int64_t part = 0;
  double weight = 0.0;

  bool operator==(const KeywordRow&) const = default;
};

// Keyword table plus key sub-phrase table, compiled from a keyphrase list.
//
// File format (UTF-8, tab separated):
//   [KEYWORDS]
//   <keyword><TAB><alone><TAB><c><TAB><weight>
//   [SUBPHRASES]
//   <subphrase><TAB><weight>
// Rows within a section are sorted bytewise by key.
class KnowledgeBase {
 public:
  using KeywordTable = std::map<std::string, KeywordRow, std::less<>>;
  using SubphraseTable = std::map<std::string, double, std::less<>>;

  KnowledgeBase() = default;
  KnowledgeBase(KeywordTable keywords, SubphraseTable subphrases)
      : keywords_(std::move(keywords)), subphrases_(std::move(subphrases)) {}

  // Every contiguous n-gram (n >= 2) of every listed keyphrase becomes a
  // sub-phrase weighted by the sum of its words' keyword weights. Throws
  // ConfigError on an empty list.
  static KnowledgeBase Build(std::span<const Phrase> phrases,
                             LogBase base = LogBase::kE);

  // 0 when absent.
  double WeightOfKeyword(std::string_view word) const;
  double WeightOfSubphrase(std::string_view key) const;

  const KeywordTable& keywords() const { return keywords_; }
  const SubphraseTable& subphrases() const { return subphrases_; }

  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  static KnowledgeBase Load(std::istream& in, const std::string& source);
  static KnowledgeBase LoadFile(const std::string& path);

  bool operator==(const KnowledgeBase&) const = default;

 private:
  KeywordTable keywords_;
  SubphraseTable subphrases_;
};

}  // namespace kpx

#endif  // KPX_KNOWLEDGE_BASE_H_
