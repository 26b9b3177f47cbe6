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

#ifndef KPX_CANDIDATES_H_
#define KPX_CANDIDATES_H_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kpx/text.h"

namespace kpx {

// A maximal run of non-boundary words. Positions count chunks in reading
// order starting at 1.
struct Chunk {
  std::vector<std::string> words;
  int position = 0;

  bool operator==(const Chunk&) const = default;
};

struct Candidate {
  std::vector<std::string> words;
  std::int64_t pf = 0;  // occurrences in the document
  int first_pos = 0;    // smallest originating chunk position

  std::size_t length() const { return words.size(); }
  bool operator==(const Candidate&) const = default;
};

// Keyed by the space-joined lowercase words.
using CandidateSet = std::map<std::string, Candidate, std::less<>>;

// Limits on n-gram expansion. Chunks longer than `discard_over` words are
// dropped outright; shorter ones yield every n-gram with n <= max_len.
struct NgramLimits {
  int max_len = 3;
  int discard_over = 5;

  // Throws ConfigError unless 1 <= max_len <= discard_over.
  void Validate() const;
};

std::vector<Chunk> SplitChunks(std::span<const Token> tokens,
                               const StopList& stops);

// N-grams of the chunk ordered by increasing n, then left to right.
std::vector<std::vector<std::string>> ExpandChunk(const Chunk& chunk,
                                                  const NgramLimits& limits);

CandidateSet CollectCandidates(std::span<const Chunk> chunks,
                               const NgramLimits& limits);

// Drops candidates whose first occurrence lies after chunk `t_pos`.
CandidateSet FilterByPosition(const CandidateSet& set, int t_pos);

}  // namespace kpx

#endif  // KPX_CANDIDATES_H_
