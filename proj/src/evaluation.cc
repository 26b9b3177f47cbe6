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

#include "kpx/evaluation.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "kpx/errors.h"
#include "kpx/porter_stemmer.h"
#include "kpx/text.h"

namespace kpx {

std::string StemPhrase(std::span<const std::string> words) {
  std::string out;
  for (const std::string& word : words) {
    if (!out.empty()) out.push_back(' ');
    out += StemWord(ToLower(word));
  }
  return out;
}

std::string StemPhrase(std::string_view phrase) {
  return StemPhrase(PhraseWords(phrase));
}

GoldSet GoldSet::FromPhrases(std::string doc_id,
                             std::span<const std::string> phrases) {
  GoldSet gold;
  gold.doc_id = std::move(doc_id);
  for (const std::string& phrase : phrases) {
    const std::vector<std::string> words = PhraseWords(phrase);
    if (words.empty()) continue;
    gold.keys.push_back(JoinWords(words));
    gold.stem_keys.insert(StemPhrase(words));
  }
  return gold;
}

GoldSet GoldSet::LoadFile(std::string doc_id, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open gold keys " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return FromPhrases(std::move(doc_id), lines);
}

std::size_t MatchCount(std::span<const std::string> extracted,
                       const GoldSet& gold) {
  std::set<std::string> stems;
  for (const std::string& phrase : extracted) stems.insert(StemPhrase(phrase));
  std::size_t matches = 0;
  for (const std::string& stem : stems) matches += gold.stem_keys.count(stem);
  return matches;
}

std::optional<DocMetrics> ComputeDocMetrics(
    std::span<const std::string> extracted, const GoldSet& gold, int k) {
  if (extracted.size() > static_cast<std::size_t>(std::max(k, 0))) {
    throw std::invalid_argument("more extracted phrases than K");
  }
  if (gold.empty()) return std::nullopt;
  DocMetrics m;
  m.extracted = extracted.size();
  m.keys_matched = MatchCount(extracted, gold);
  m.precision = extracted.empty()
                    ? 0.0
                    : static_cast<double>(m.keys_matched) /
                          static_cast<double>(extracted.size());
  m.recall = static_cast<double>(m.keys_matched) /
             static_cast<double>(gold.stem_keys.size());
  return m;
}

MeanSd SampleMeanSd(std::span<const double> values) {
  MeanSd out;
  if (values.empty()) return out;
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() < 2) return out;
  double squares = 0.0;
  for (double v : values) squares += (v - out.mean) * (v - out.mean);
  out.sd = std::sqrt(squares / (n - 1.0));
  return out;
}

std::optional<DocEvaluation> EvaluateDocument(
    const GoldSet& gold, std::span<const std::string> ranked,
    std::span<const int> k_values) {
  if (gold.empty()) return std::nullopt;
  DocEvaluation eval;
  eval.doc_id = gold.doc_id;
  eval.gold_size = gold.stem_keys.size();
  eval.k_values.assign(k_values.begin(), k_values.end());
  int max_k = 0;
  for (int k : k_values) max_k = std::max(max_k, k);
  const std::size_t kept = std::min(ranked.size(), static_cast<std::size_t>(max_k));
  eval.extracted.assign(ranked.begin(), ranked.begin() + kept);
  for (int k : k_values) {
    const std::size_t n = std::min(ranked.size(), static_cast<std::size_t>(k));
    eval.per_k.push_back(*ComputeDocMetrics(ranked.first(n), gold, k));
  }
  return eval;
}

EvalReport Aggregate(std::vector<DocEvaluation> docs,
                     std::span<const int> k_values) {
  if (docs.empty()) throw std::invalid_argument("no documents to aggregate");
  std::sort(docs.begin(), docs.end(),
            [](const DocEvaluation& a, const DocEvaluation& b) {
              return a.doc_id < b.doc_id;
            });
  EvalReport report;
  report.n_docs = docs.size();
  if (docs.size() < 2) {
    report.warnings.push_back(
        "fewer than 2 documents evaluated; standard deviations reported as 0");
  }
  double gold_total = 0.0;
  for (const DocEvaluation& d : docs) {
    if (!std::equal(d.k_values.begin(), d.k_values.end(), k_values.begin(),
                    k_values.end())) {
      throw std::invalid_argument("document " + d.doc_id +
                                  " was evaluated at different K values");
    }
    gold_total += static_cast<double>(d.gold_size);
  }
  report.avg_gold_keys = gold_total / static_cast<double>(docs.size());

  std::vector<double> precision(docs.size());
  std::vector<double> recall(docs.size());
  std::vector<double> keys(docs.size());
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      const DocMetrics& m = docs[d].per_k[i];
      precision[d] = m.precision;
      recall[d] = m.recall;
      keys[d] = static_cast<double>(m.keys_matched);
    }
    ReportRow row;
    row.k = k_values[i];
    row.avg_keys = SampleMeanSd(keys);
    row.precision = SampleMeanSd(precision);
    row.recall = SampleMeanSd(recall);
    report.rows.push_back(row);
  }
  report.docs = std::move(docs);
  return report;
}

namespace {

std::string PlusMinus(const MeanSd& v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << v.mean << " ± " << v.sd;
  return out.str();
}

}  // namespace

std::string FormatReport(const EvalReport& report) {
  std::ostringstream out;
  out << "Documents evaluated: " << report.n_docs << '\n';
  out << "Average author-assigned keys: " << std::fixed << std::setprecision(3)
      << report.avg_gold_keys << '\n';
  out << "SD: sample (n-1)\n\n";

  // "±" is two bytes but one column; pad by hand.
  auto cell = [](const std::string& s, std::size_t width) {
    std::size_t columns = 0;
    for (unsigned char c : s) columns += (c & 0xC0) != 0x80;
    return s + std::string(width > columns ? width - columns : 1, ' ');
  };
  out << cell("# of KEYS", 11) << cell("Average Keys ± SD", 21)
      << cell("Pre ± SD", 17) << "Re ± SD\n";
  for (const ReportRow& row : report.rows) {
    out << cell(std::to_string(row.k), 11) << cell(PlusMinus(row.avg_keys), 21)
        << cell(PlusMinus(row.precision), 17) << PlusMinus(row.recall) << '\n';
  }

  out << "\nPer-document detail\n";
  out << "doc_id\tgold\tK\textracted\tmatched\tprecision\trecall\n";
  for (const DocEvaluation& d : report.docs) {
    for (std::size_t i = 0; i < d.k_values.size(); ++i) {
      const DocMetrics& m = d.per_k[i];
      out << d.doc_id << '\t' << d.gold_size << '\t' << d.k_values[i] << '\t'
          << m.extracted << '\t' << m.keys_matched << '\t' << std::fixed
          << std::setprecision(3) << m.precision << '\t' << m.recall << '\n';
    }
  }
  return out.str();
}

std::string ReportToJson(const EvalReport& report) {
  using nlohmann::json;
  json j;
  j["n_docs"] = report.n_docs;
  j["avg_gold_keys"] = report.avg_gold_keys;
  j["sd"] = "sample";
  j["warnings"] = report.warnings;
  json rows = json::array();
  for (const ReportRow& row : report.rows) {
    rows.push_back({{"k", row.k},
                    {"avg_keys_mean", row.avg_keys.mean},
                    {"avg_keys_sd", row.avg_keys.sd},
                    {"precision_mean", row.precision.mean},
                    {"precision_sd", row.precision.sd},
                    {"recall_mean", row.recall.mean},
                    {"recall_sd", row.recall.sd}});
  }
  j["per_k"] = rows;
  json docs = json::array();
  for (const DocEvaluation& d : report.docs) {
    json per_k = json::array();
    for (std::size_t i = 0; i < d.k_values.size(); ++i) {
      const DocMetrics& m = d.per_k[i];
      per_k.push_back({{"k", d.k_values[i]},
                       {"extracted", m.extracted},
                       {"keys_matched", m.keys_matched},
                       {"precision", m.precision},
                       {"recall", m.recall}});
    }
    docs.push_back({{"doc_id", d.doc_id},
                    {"gold_size", d.gold_size},
                    {"extracted", d.extracted},
                    {"per_k", per_k}});
  }
  j["documents"] = docs;
  return j.dump(2) + "\n";
}

std::vector<int> ParseKList(std::string_view list) {
  std::vector<int> ks;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const std::string_view item =
        list.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    int k = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() ||
        k < 1) {
      throw ConfigError("invalid K list '" + std::string(list) +
                        "': expected comma-separated positive integers");
    }
    ks.push_back(k);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

}  // namespace kpx
