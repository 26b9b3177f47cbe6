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
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "kpx/errors.h"

namespace kpx {

namespace {

std::optional<std::int64_t> ParseCount(std::string_view s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Splits "<key>\t<value>" at the last tab.
bool SplitPair(std::string_view line, std::string_view* key,
               std::string_view* value) {
  const auto tab = line.rfind('\t');
  if (tab == std::string_view::npos) return false;
  *key = line.substr(0, tab);
  *value = line.substr(tab + 1);
  return true;
}

}  // namespace

std::string_view LogBaseName(LogBase base) {
  switch (base) {
    case LogBase::kE: return "e";
    case LogBase::k2: return "2";
    case LogBase::k10: return "10";
  }
  return "e";
}

std::optional<LogBase> ParseLogBase(std::string_view name) {
  if (name == "e") return LogBase::kE;
  if (name == "2") return LogBase::k2;
  if (name == "10") return LogBase::k10;
  return std::nullopt;
}

double Log(double x, LogBase base) {
  switch (base) {
    case LogBase::kE: return std::log(x);
    case LogBase::k2: return std::log2(x);
    case LogBase::k10: return std::log10(x);
  }
  return std::log(x);
}

IdfModel::IdfModel(std::int64_t n_docs, DocFreqTable df, LogBase base)
    : n_docs_(n_docs), df_(std::move(df)), log_base_(base) {
  if (n_docs_ < 1) {
    throw DataError("IDF model needs at least one document, got N=" +
                    std::to_string(n_docs_));
  }
  for (const auto& [word, count] : df_) {
    if (count < 1 || count > n_docs_) {
      throw DataError("document frequency of '" + word + "' is " +
                      std::to_string(count) + ", outside [1, " +
                      std::to_string(n_docs_) + "]");
    }
  }
}

std::int64_t IdfModel::DocFreq(std::string_view word) const {
  const auto it = df_.find(word);
  return it == df_.end() ? 0 : it->second;
}

double IdfModel::Idf(std::string_view word) const {
  const std::int64_t df = std::max<std::int64_t>(DocFreq(word), 1);
  return Log(static_cast<double>(n_docs_) / static_cast<double>(df),
             log_base_);
}

IdfModel IdfModel::WithLogBase(LogBase base) const {
  IdfModel copy = *this;
  copy.log_base_ = base;
  return copy;
}

void IdfModel::Save(std::ostream& out) const {
  out << "N\t" << n_docs_ << '\n';
  out << "LOGBASE\t" << LogBaseName(log_base_) << '\n';
  for (const auto& [word, count] : df_) out << word << '\t' << count << '\n';
}

void IdfModel::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write IDF model " + path);
  Save(out);
  out.flush();
  if (!out) throw DataError("failed writing IDF model " + path);
}

IdfModel IdfModel::Load(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::string_view key, value;

  auto next_header = [&](std::string_view expected) -> std::string_view {
    ++line_no;
    if (!std::getline(in, line) || !SplitPair(line, &key, &value) ||
        key != expected) {
      throw DataError(source, line_no,
                      "expected '" + std::string(expected) + "<TAB>...' header");
    }
    return value;
  };

  const auto n_docs = ParseCount(next_header("N"));
  if (!n_docs || *n_docs < 1) {
    throw DataError(source, line_no, "N must be a positive integer");
  }
  const auto base = ParseLogBase(next_header("LOGBASE"));
  if (!base) throw DataError(source, line_no, "LOGBASE must be e, 2 or 10");

  DocFreqTable df;
  std::string previous;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!SplitPair(line, &key, &value) || key.empty()) {
      throw DataError(source, line_no, "expected '<word><TAB><df>'");
    }
    const auto count = ParseCount(value);
    if (!count || *count < 1 || *count > *n_docs) {
      throw DataError(source, line_no,
                      "document frequency must be in [1, N]");
    }
    if (!df.empty() && std::string_view(previous) >= key) {
      throw DataError(source, line_no, "words must be sorted and unique");
    }
    previous.assign(key);
    df.emplace(std::string(key), *count);
  }
  return IdfModel(*n_docs, std::move(df), *base);
}

IdfModel IdfModel::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open IDF model " + path);
  return Load(in, path);
}

std::vector<std::string> DocumentVocabulary(std::string_view text,
                                            const StopList& stops) {
  std::vector<std::string> words;
  for (Token& token : Tokenize(text)) {
    if (!IsBoundary(token, stops)) words.push_back(std::move(token.normalized));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

IdfModel BuildIdf(std::span<const std::string> corpus, const StopList& stops,
                  LogBase base) {
  if (corpus.empty()) throw ConfigError("cannot build IDF from an empty corpus");
  IdfModel::DocFreqTable df;
  for (const std::string& doc : corpus) {
    for (std::string& word : DocumentVocabulary(doc, stops)) ++df[std::move(word)];
  }
  return IdfModel(static_cast<std::int64_t>(corpus.size()), std::move(df),
                  base);
}

}  // namespace kpx
