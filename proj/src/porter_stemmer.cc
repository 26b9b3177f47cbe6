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

#include "kpx/porter_stemmer.h"

#include <algorithm>
#include <array>
#include <cstddef>

namespace kpx {

namespace {

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

constexpr std::array<Rule, 20> kStep2 = {{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
    {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
    {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
    {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
    {"iviti", "ive"},   {"biliti", "ble"},
}};

constexpr std::array<Rule, 7> kStep3 = {{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<std::string_view, 19> kStep4 = {
    "al",   "ance", "ence", "er",  "ic",  "able", "ible",
    "ant",  "ement", "ment", "ent", "ion", "ou",  "ism",
    "ate",  "iti",  "ous",  "ive", "ize",
};

// Working buffer for one word. All measures are taken over a prefix
// b_[0, len), i.e. the stem left after removing a candidate suffix.
class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word) {}

  std::string Run() {
    Step1a();
    Step1b();
    Step1c();
    Step2();
    Step3();
    Step4();
    Step5a();
    Step5b();
    return b_;
  }

 private:
  bool IsConsonant(std::size_t i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 || !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in [C](VC)^m[V].
  int Measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && IsConsonant(i)) ++i;
    while (i < len) {
      while (i < len && !IsConsonant(i)) ++i;
      if (i >= len) break;
      while (i < len && IsConsonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool HasVowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool EndsDoubleConsonant(std::size_t len) const {
    return len >= 2 && b_[len - 1] == b_[len - 2] && IsConsonant(len - 1);
  }

  // *o: the prefix ends consonant-vowel-consonant, the last not w, x or y.
  bool EndsCvc(std::size_t len) const {
    if (len < 3) return false;
    if (!IsConsonant(len - 3) || IsConsonant(len - 2) ||
        !IsConsonant(len - 1)) {
      return false;
    }
    const char c = b_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool EndsWith(std::string_view suffix) const {
    return b_.size() >= suffix.size() &&
           std::string_view(b_).substr(b_.size() - suffix.size()) == suffix;
  }

  std::size_t StemLength(std::string_view suffix) const {
    return b_.size() - suffix.size();
  }

  void Replace(std::string_view suffix, std::string_view replacement) {
    b_.resize(StemLength(suffix));
    b_ += replacement;
  }

  // Longest rule whose suffix ends the word, or nullptr.
  template <std::size_t N>
  const Rule* Match(const std::array<Rule, N>& rules) const {
    const Rule* best = nullptr;
    for (const Rule& r : rules) {
      if (EndsWith(r.suffix) &&
          (best == nullptr || r.suffix.size() > best->suffix.size())) {
        best = &r;
      }
    }
    return best;
  }

  void Step1a() {
    if (EndsWith("sses")) {
      Replace("sses", "ss");
    } else if (EndsWith("ies")) {
      Replace("ies", "i");
    } else if (EndsWith("ss")) {
      // unchanged
    } else if (EndsWith("s")) {
      Replace("s", "");
    }
  }

  void Step1b() {
    if (EndsWith("eed")) {
      if (Measure(StemLength("eed")) > 0) Replace("eed", "ee");
      return;
    }
    bool stripped = false;
    if (EndsWith("ed") && HasVowel(StemLength("ed"))) {
      Replace("ed", "");
      stripped = true;
    } else if (EndsWith("ing") && HasVowel(StemLength("ing"))) {
      Replace("ing", "");
      stripped = true;
    }
    if (!stripped) return;

    if (EndsWith("at") || EndsWith("bl") || EndsWith("iz")) {
      b_ += 'e';
    } else if (EndsDoubleConsonant(b_.size())) {
      const char c = b_.back();
      if (c != 'l' && c != 's' && c != 'z') b_.pop_back();
    } else if (Measure(b_.size()) == 1 && EndsCvc(b_.size())) {
      b_ += 'e';
    }
  }

  void Step1c() {
    if (EndsWith("y") && HasVowel(StemLength("y"))) b_.back() = 'i';
  }

  void Step2() {
    if (const Rule* r = Match(kStep2);
        r != nullptr && Measure(StemLength(r->suffix)) > 0) {
      Replace(r->suffix, r->replacement);
    }
  }

  void Step3() {
    if (const Rule* r = Match(kStep3);
        r != nullptr && Measure(StemLength(r->suffix)) > 0) {
      Replace(r->suffix, r->replacement);
    }
  }

  void Step4() {
    std::string_view best;
    for (std::string_view s : kStep4) {
      if (EndsWith(s) && s.size() > best.size()) best = s;
    }
    if (best.empty()) return;
    const std::size_t stem = StemLength(best);
    if (Measure(stem) <= 1) return;
    if (best == "ion" && (stem == 0 || (b_[stem - 1] != 's' &&
                                        b_[stem - 1] != 't'))) {
      return;
    }
    b_.resize(stem);
  }

  void Step5a() {
    if (!EndsWith("e")) return;
    const std::size_t stem = StemLength("e");
    const int m = Measure(stem);
    if (m > 1 || (m == 1 && !EndsCvc(stem))) b_.pop_back();
  }

  void Step5b() {
    if (Measure(b_.size()) > 1 && EndsDoubleConsonant(b_.size()) &&
        b_.back() == 'l') {
      b_.pop_back();
    }
  }

  std::string b_;
};

}  // namespace

std::string StemWord(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  if (!std::all_of(word.begin(), word.end(),
                   [](char c) { return c >= 'a' && c <= 'z'; })) {
    return std::string(word);
  }
  return Stemmer(word).Run();
}

}  // namespace kpx
