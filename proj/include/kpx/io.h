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

#ifndef KPX_IO_H_
#define KPX_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "kpx/scoring.h"

namespace kpx {

// Whole file as bytes. Throws DataError if it cannot be read.
std::string ReadFile(const std::string& path);

// Regular files in `dir` whose name ends with `extension` (e.g. ".txt"),
// sorted by filename. Throws DataError if `dir` is not a directory.
std::vector<std::string> ListFiles(const std::string& dir,
                                   std::string_view extension);

// Filename without directory and extension: "corpus/doc7.txt" -> "doc7".
std::string DocumentId(const std::string& path);

std::string Sha256Hex(std::string_view bytes);

struct InputDigest {
  std::string role;  // "idf", "kb", "stoplist", "document", ...
  std::string path;
  std::string sha256;
};

// Reproducibility record written next to extraction and evaluation output.
struct RunManifest {
  std::string command;
  ScoringConfig config;
  std::string log_base;
  std::vector<int> k_values;  // evaluate only
  std::vector<InputDigest> inputs;
  std::string tool_version;
  std::string timestamp;  // UTC, ISO 8601

  std::string ToJson() const;
};

std::string UtcTimestamp();

}  // namespace kpx

#endif  // KPX_IO_H_
