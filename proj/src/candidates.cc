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

#include "kpx/errors.h"

namespace kpx {

void NgramLimits::Validate() const {
  if (max_len < 1) {
    throw ConfigError("max-len must be at least 1, got " +
                      std::to_string(max_len));
  }
  if (discard_over < max_len) {
    throw ConfigError("discard-over (" + std::to_string(discard_over) +
                      ") must not be smaller than max-len (" +
                      std::to_string(max_len) + ")");
  }
}

std::vector<Chunk> SplitChunks(std::span<const Token> tokens,
                               const StopList& stops) {
  std::vector<Chunk> chunks;
  Chunk current;
  auto flush = [&] {
    if (current.words.empty()) return;
    current.position = static_cast<int>(chunks.size()) + 1;
    chunks.push_back(std::move(current));
    current = Chunk();
  };
  for (const Token& token : tokens) {
    if (IsBoundary(token, stops)) {
      flush();
    } else {
      current.words.push_back(token.normalized);
    }
  }
  flush();
  return chunks;
}

std::vector<std::vector<std::string>> ExpandChunk(const Chunk& chunk,
                                                  const NgramLimits& limits) {
  std::vector<std::vector<std::string>> grams;
  const int len = static_cast<int>(chunk.words.size());
  if (len > limits.discard_over) return grams;
  const int top = std::min(len, limits.max_len);
  for (int n = 1; n <= top; ++n) {
    for (int start = 0; start + n <= len; ++start) {
      grams.emplace_back(chunk.words.begin() + start,
                         chunk.words.begin() + start + n);
    }
  }
  return grams;
}

CandidateSet CollectCandidates(std::span<const Chunk> chunks,
                               const NgramLimits& limits) {
  CandidateSet set;
  for (const Chunk& chunk : chunks) {
    for (auto& gram : ExpandChunk(chunk, limits)) {
      std::string key = JoinWords(gram);
      auto it = set.find(key);
      if (it == set.end()) {
        Candidate c;
        c.words = std::move(gram);
        c.pf = 1;
        c.first_pos = chunk.position;
        set.emplace(std::move(key), std::move(c));
      } else {
        ++it->second.pf;
        it->second.first_pos = std::min(it->second.first_pos, chunk.position);
      }
    }
  }
  return set;
}

CandidateSet FilterByPosition(const CandidateSet& set, int t_pos) {
  CandidateSet kept;
  for (const auto& [key, candidate] : set) {
    if (candidate.first_pos <= t_pos) kept.emplace(key, candidate);
  }
  return kept;
}

}  // namespace kpx
