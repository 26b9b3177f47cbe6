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

#ifndef KPX_PORTER_STEMMER_H_
#define KPX_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace kpx {

// Porter (1980) suffix-stripping stemmer for lowercase English words.
// Words of one or two letters, and anything containing a character outside
// a-z, are returned unchanged.
std::string StemWord(std::string_view word);

}  // namespace kpx

#endif  // KPX_PORTER_STEMMER_H_
