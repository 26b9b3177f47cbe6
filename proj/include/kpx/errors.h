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

#ifndef KPX_ERRORS_H_
#define KPX_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kpx {

// Invalid tunables or missing inputs. Raised before any document is scored.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unreadable input data (model files, corpora, gold keys).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;

  // Formats "<source>:<line>: <message>".
  DataError(const std::string& source, std::size_t line,
            const std::string& message);
};

}  // namespace kpx

#endif  // KPX_ERRORS_H_
