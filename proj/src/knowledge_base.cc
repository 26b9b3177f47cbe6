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

#include "kpx/knowledge_base.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "kpx/errors.h"
#include "kpx/text.h"

namespace kpx {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view s, T* value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Shortest representation that parses back to the same double.
std::string FormatWeight(double w) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

}  // namespace

std::vector<Phrase> ReadKeyphraseList(std::istream& in) {
  std::vector<Phrase> phrases;
  std::string line;
  while (std::getline(in, line)) {
    Phrase words = PhraseWords(line);
    if (!words.empty()) phrases.push_back(std::move(words));
  }
  return phrases;
}

std::vector<Phrase> ReadKeyphraseListFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open keyphrase list " + path);
  return ReadKeyphraseList(in);
}

KeywordCountTable CountModes(std::span<const Phrase> phrases) {
  KeywordCountTable counts;
  for (const Phrase& phrase : phrases) {
    if (phrase.size() == 1) {
      ++counts[phrase.front()].alone;
    } else {
      for (const std::string& word : phrase) ++counts[word].part;
    }
  }
  return counts;
}

double KeywordWeight(std::int64_t alone, std::int64_t part, LogBase base) {
  if (alone < 0 || part < 0 || alone + part == 0) {
    throw std::invalid_argument("keyword must occur at least once");
  }
  if (part == 0) return 1.0;
  // log(1) = 0 makes the raw weight infinite; min() clamps it to 1 as well.
  const double inverse_log = 1.0 / Log(static_cast<double>(part), base);
  const double raw = alone == 0 ? inverse_log : 0.5 * (1.0 + inverse_log);
  return std::min(1.0, raw);
}

KnowledgeBase KnowledgeBase::Build(std::span<const Phrase> phrases,
                                   LogBase base) {
  if (phrases.empty()) {
    throw ConfigError("cannot build a knowledge base from an empty list");
  }
  KeywordTable keywords;
  for (const auto& [word, counts] : CountModes(phrases)) {
    keywords.emplace(word,
                     KeywordRow{counts.alone, counts.part,
                                KeywordWeight(counts.alone, counts.part, base)});
  }
  SubphraseTable subphrases;
  for (const Phrase& phrase : phrases) {
    const std::size_t len = phrase.size();
    for (std::size_t n = 2; n <= len; ++n) {
      for (std::size_t start = 0; start + n <= len; ++start) {
        double weight = 0.0;
        std::string key;
        for (std::size_t i = start; i < start + n; ++i) {
          if (!key.empty()) key.push_back(' ');
          key += phrase[i];
          weight += keywords.find(phrase[i])->second.weight;
        }
        subphrases.emplace(std::move(key), weight);
      }
    }
  }
  return KnowledgeBase(std::move(keywords), std::move(subphrases));
}

double KnowledgeBase::WeightOfKeyword(std::string_view word) const {
  const auto it = keywords_.find(word);
  return it == keywords_.end() ? 0.0 : it->second.weight;
}

double KnowledgeBase::WeightOfSubphrase(std::string_view key) const {
  const auto it = subphrases_.find(key);
  return it == subphrases_.end() ? 0.0 : it->second;
}

void KnowledgeBase::Save(std::ostream& out) const {
  out << "[KEYWORDS]\n";
  for (const auto& [word, row] : keywords_) {
    out << word << '\t' << row.alone << '\t' << row.part << '\t'
        << FormatWeight(row.weight) << '\n';
  }
  out << "[SUBPHRASES]\n";
  for (const auto& [key, weight] : subphrases_) {
    out << key << '\t' << FormatWeight(weight) << '\n';
  }
}

void KnowledgeBase::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write knowledge base " + path);
  Save(out);
  out.flush();
  if (!out) throw DataError("failed writing knowledge base " + path);
}

KnowledgeBase KnowledgeBase::Load(std::istream& in, const std::string& source) {
  enum class Section { kNone, kKeywords, kSubphrases };
  Section section = Section::kNone;
  bool saw_keywords = false;
  bool saw_subphrases = false;
  KeywordTable keywords;
  SubphraseTable subphrases;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "[KEYWORDS]") {
      if (saw_keywords || saw_subphrases) {
        throw DataError(source, line_no, "unexpected [KEYWORDS] section");
      }
      saw_keywords = true;
      section = Section::kKeywords;
      continue;
    }
    if (line == "[SUBPHRASES]") {
      if (!saw_keywords || saw_subphrases) {
        throw DataError(source, line_no, "unexpected [SUBPHRASES] section");
      }
      saw_subphrases = true;
      section = Section::kSubphrases;
      continue;
    }
    const auto fields = SplitTabs(line);
    switch (section) {
      case Section::kNone:
        throw DataError(source, line_no, "row before any section header");
      case Section::kKeywords: {
        KeywordRow row;
        if (fields.size() != 4 || fields[0].empty() ||
            fields[0].find(' ') != std::string_view::npos ||
            !ParseNumber(fields[1], &row.alone) ||
            !ParseNumber(fields[2], &row.part) ||
            !ParseNumber(fields[3], &row.weight)) {
          throw DataError(source, line_no,
                          "expected '<keyword><TAB><alone><TAB><c><TAB><weight>'");
        }
        if (row.alone < 0 || row.part < 0 || row.alone + row.part == 0) {
          throw DataError(source, line_no, "keyword counts must sum to >= 1");
        }
        if (!(row.weight > 0.0 && row.weight <= 1.0)) {
          throw DataError(source, line_no, "keyword weight must be in (0, 1]");
        }
        if (!keywords.emplace(std::string(fields[0]), row).second) {
          throw DataError(source, line_no, "duplicate keyword");
        }
        break;
      }
      case Section::kSubphrases: {
        double weight = 0.0;
        if (fields.size() != 2 ||
            fields[0].find(' ') == std::string_view::npos ||
            !ParseNumber(fields[1], &weight)) {
          throw DataError(source, line_no,
                          "expected '<multi-word subphrase><TAB><weight>'");
        }
        if (!(weight > 0.0) || !std::isfinite(weight)) {
          throw DataError(source, line_no, "subphrase weight must be positive");
        }
        if (!subphrases.emplace(std::string(fields[0]), weight).second) {
          throw DataError(source, line_no, "duplicate subphrase");
        }
        break;
      }
    }
  }
  if (!saw_keywords || !saw_subphrases) {
    throw DataError(source, line_no,
                    "missing [KEYWORDS] or [SUBPHRASES] section");
  }
  return KnowledgeBase(std::move(keywords), std::move(subphrases));
}

KnowledgeBase KnowledgeBase::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open knowledge base " + path);
  return Load(in, path);
}

}  // namespace kpx
