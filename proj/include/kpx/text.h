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

#ifndef KPX_TEXT_H_
#define KPX_TEXT_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kpx {

enum class TokenKind { kWord, kNumber, kPunctuation };

struct Token {
  std::string surface;
  std::string normalized;  // case-folded surface
  TokenKind kind = TokenKind::kPunctuation;
  std::size_t char_offset = 0;  // byte offset of surface in the input

  bool operator==(const Token&) const = default;
};

// Splits UTF-8 text into word, number and punctuation tokens. Whitespace is
// skipped; every other byte of the input belongs to exactly one token.
//
// A word is a maximal run of letters and digits containing at least one
// letter. Hyphens and apostrophes between two alphanumerics stay inside the
// word ("off-the-shelf", "parkinson's"), as do periods that follow a single
// letter and precede another letter ("i.e", "e.g"). A run of digits with at
// most one interior decimal point is a number. Every other non-space code
// point is a one-character punctuation token.
std::vector<Token> Tokenize(std::string_view text);

// Simple (one-to-one) lowercase mapping for ASCII, Latin-1, Latin
// Extended-A, Greek and Cyrillic. Other code points pass through.
std::string ToLower(std::string_view text);

// Lowercased word and number tokens of a short phrase, punctuation dropped.
// Used for keyphrase list lines and gold keys.
std::vector<std::string> PhraseWords(std::string_view phrase);

// Joins words with single spaces.
std::string JoinWords(const std::vector<std::string>& words);

// Stopwords plus common verbs. Immutable once constructed.
class StopList {
 public:
  StopList() = default;
  StopList(const std::vector<std::string>& entries, std::string source);

  // One entry per line; '#' starts a comment; blank lines are ignored.
  static StopList Parse(std::istream& in, std::string source);
  static StopList Parse(std::string_view text, std::string source);
  static StopList LoadFile(const std::string& path);

  // The English stopword and common-verb list compiled into the library.
  static const StopList& Default();
  static std::string_view DefaultText();

  bool Contains(std::string_view normalized) const {
    return entries_.find(normalized) != entries_.end();
  }
  std::size_t size() const { return entries_.size(); }
  const std::string& source() const { return source_; }

 private:
  std::set<std::string, std::less<>> entries_;
  std::string source_;
};

// True for punctuation, numbers and stoplisted words.
bool IsBoundary(const Token& token, const StopList& stops);

}  // namespace kpx

#endif  // KPX_TEXT_H_
