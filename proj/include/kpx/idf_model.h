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

#ifndef KPX_IDF_MODEL_H_
#define KPX_IDF_MODEL_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpx/text.h"

namespace kpx {

enum class LogBase { kE, k2, k10 };

std::string_view LogBaseName(LogBase base);  // "e", "2" or "10"
std::optional<LogBase> ParseLogBase(std::string_view name);

// Logarithm of x in the given base. Base e uses std::log directly so that
// natural-log results are bit-identical to a plain std::log call.
double Log(double x, LogBase base);

// Corpus size and per-word document frequencies.
//
// File format (UTF-8, tab separated):
//   N<TAB><n_docs>
//   LOGBASE<TAB><e|2|10>
//   <word><TAB><df>      one line per word, sorted bytewise by word
class IdfModel {
 public:
  using DocFreqTable = std::map<std::string, std::int64_t, std::less<>>;

  // Throws DataError unless n_docs >= 1 and 1 <= df <= n_docs everywhere.
  IdfModel(std::int64_t n_docs, DocFreqTable df, LogBase base = LogBase::kE);

  std::int64_t n_docs() const { return n_docs_; }
  LogBase log_base() const { return log_base_; }
  const DocFreqTable& doc_freqs() const { return df_; }
  std::size_t vocabulary_size() const { return df_.size(); }

  // Stored DF, or 0 for unseen words.
  std::int64_t DocFreq(std::string_view word) const;

  // log(N / DF) with DF clamped to at least 1.
  double Idf(std::string_view word) const;

  // Same counts, different logarithm base.
  IdfModel WithLogBase(LogBase base) const;

  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  static IdfModel Load(std::istream& in, const std::string& source);
  static IdfModel LoadFile(const std::string& path);

  bool operator==(const IdfModel&) const = default;

 private:
  std::int64_t n_docs_;
  DocFreqTable df_;
  LogBase log_base_;
};

// Distinct non-boundary words of one document.
std::vector<std::string> DocumentVocabulary(std::string_view text,
                                            const StopList& stops);

// Serial reference build. Throws ConfigError on an empty corpus.
IdfModel BuildIdf(std::span<const std::string> corpus, const StopList& stops,
                  LogBase base = LogBase::kE);

}  // namespace kpx

#endif  // KPX_IDF_MODEL_H_
