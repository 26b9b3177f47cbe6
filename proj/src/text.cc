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

#include "kpx/text.h"

#include <fstream>
#include <istream>
#include <sstream>

#include "kpx/errors.h"

namespace kpx {

namespace {

#include "default_stoplist.inc"

constexpr char32_t kInvalid = 0xFFFD;

struct Decoded {
  char32_t cp;
  std::size_t length;
};

// Decodes one code point at `pos`. Malformed sequences decode as U+FFFD
// spanning a single byte.
Decoded DecodeAt(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {kInvalid, 1};
  }
  if (pos + len > s.size()) return {kInvalid, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {kInvalid, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  // Overlong encodings and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {kInvalid, 1};
  }
  return {cp, len};
}

void AppendUtf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsSpace(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool IsLetter(char32_t cp) {
  if (cp < 0x80) return (cp | 0x20) >= 'a' && (cp | 0x20) <= 'z';
  if (cp < 0xC0) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp == kInvalid) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFE30 && cp <= 0xFE6F) return false;  // compatibility forms
  if (cp >= 0xFF00 && cp <= 0xFF20) return false;  // fullwidth ASCII punct
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return false;  // emoji and pictographs
  return true;
}

bool IsAlnum(char32_t cp) { return IsLetter(cp) || IsDigit(cp); }

bool IsJoiner(char32_t cp) {
  return cp == '-' || cp == '\'' || cp == 0x2010 || cp == 0x2011 ||
         cp == 0x2019;
}

char32_t LowerCodePoint(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137) return cp | 1;
  if (cp >= 0x139 && cp <= 0x148) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return cp | 1;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

// Whether the text at `pos` starts with a code point satisfying `pred`.
template <typename Pred>
bool NextIs(std::string_view s, std::size_t pos, Pred pred) {
  return pos < s.size() && pred(DecodeAt(s, pos).cp);
}

TokenKind Classify(std::string_view surface) {
  bool has_letter = false;
  bool digits_only = true;
  int dots = 0;
  for (std::size_t i = 0; i < surface.size();) {
    const Decoded d = DecodeAt(surface, i);
    if (IsLetter(d.cp)) {
      has_letter = true;
    } else if (d.cp == '.') {
      ++dots;
    } else if (!IsDigit(d.cp)) {
      digits_only = false;
    }
    i += d.length;
  }
  if (has_letter) return TokenKind::kWord;
  if (digits_only && dots <= 1 && surface.front() != '.' &&
      surface.back() != '.') {
    return TokenKind::kNumber;
  }
  return TokenKind::kPunctuation;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string ToLower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const Decoded d = DecodeAt(text, i);
    if (d.cp == kInvalid && d.length == 1) {
      out.push_back(text[i]);
    } else {
      AppendUtf8(LowerCodePoint(d.cp), &out);
    }
    i += d.length;
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const Decoded d = DecodeAt(text, i);
    if (IsSpace(d.cp)) {
      i += d.length;
      continue;
    }
    const std::size_t start = i;
    if (!IsAlnum(d.cp)) {
      i += d.length;
    } else {
      bool only_digits = IsDigit(d.cp);
      bool seen_dot = false;
      // Letters in the current hyphen/period-delimited segment.
      std::size_t segment_letters = IsLetter(d.cp) ? 1 : 0;
      std::size_t segment_len = 1;
      i += d.length;
      while (i < text.size()) {
        const Decoded next = DecodeAt(text, i);
        if (IsAlnum(next.cp)) {
          only_digits = only_digits && IsDigit(next.cp);
          segment_letters += IsLetter(next.cp) ? 1 : 0;
          ++segment_len;
          i += next.length;
          continue;
        }
        const std::size_t after = i + next.length;
        if (IsJoiner(next.cp) && NextIs(text, after, IsAlnum)) {
          only_digits = false;
          segment_letters = 0;
          segment_len = 0;
          i = after;
          continue;
        }
        if (next.cp == '.' && segment_len == 1 && segment_letters == 1 &&
            NextIs(text, after, IsLetter)) {
          only_digits = false;
          segment_letters = 0;
          segment_len = 0;
          i = after;
          continue;
        }
        if (next.cp == '.' && only_digits && !seen_dot &&
            NextIs(text, after, IsDigit)) {
          seen_dot = true;
          i = after;
          continue;
        }
        break;
      }
    }
    Token token;
    token.surface = std::string(text.substr(start, i - start));
    token.normalized = ToLower(token.surface);
    token.kind = Classify(token.surface);
    token.char_offset = start;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<std::string> PhraseWords(std::string_view phrase) {
  std::vector<std::string> words;
  for (Token& token : Tokenize(phrase)) {
    if (token.kind != TokenKind::kPunctuation) {
      words.push_back(std::move(token.normalized));
    }
  }
  return words;
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

StopList::StopList(const std::vector<std::string>& entries,
                   std::string source)
    : source_(std::move(source)) {
  for (const std::string& e : entries) {
    const std::string_view trimmed = Trim(e);
    if (!trimmed.empty()) entries_.insert(ToLower(trimmed));
  }
}

StopList StopList::Parse(std::istream& in, std::string source) {
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (!view.empty()) entries.emplace_back(view);
  }
  return StopList(entries, std::move(source));
}

StopList StopList::Parse(std::string_view text, std::string source) {
  std::istringstream in{std::string(text)};
  return Parse(in, std::move(source));
}

StopList StopList::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open stoplist " + path);
  return Parse(in, path);
}

std::string_view StopList::DefaultText() { return kDefaultStopList; }

const StopList& StopList::Default() {
  static const StopList* list =
      new StopList(Parse(kDefaultStopList, "builtin:stoplist_en.txt"));
  return *list;
}

bool IsBoundary(const Token& token, const StopList& stops) {
  return token.kind != TokenKind::kWord || stops.Contains(token.normalized);
}

}  // namespace kpx
