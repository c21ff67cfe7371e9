// Copyright 2026 The Lexiweave Authors.
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

#include "lexiweave/lemma.h"

#include <array>

namespace lexiweave {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Appends the lowercase form of text to out.
void AppendLower(std::string_view text, std::string *out) {
  for (size_t i = 0; i < text.size(); ++i) {
    unsigned char c = text[i];
    if (c >= 'A' && c <= 'Z') {
      out->push_back(static_cast<char>(c + 32));
    } else if (c == 0xC3 && i + 1 < text.size()) {
      // Latin-1 supplement capitals U+00C0..U+00DE, except U+00D7 (×).
      unsigned char next = text[i + 1];
      if (next >= 0x80 && next <= 0x9E && next != 0x97) next += 0x20;
      out->push_back(static_cast<char>(c));
      out->push_back(static_cast<char>(next));
      ++i;
    } else {
      out->push_back(static_cast<char>(c));
    }
  }
}

// Punctuation stripped from token edges. Multi-byte entries are UTF-8.
constexpr std::array<std::string_view, 19> kPunctuation = {
    ".", ",", ";", ":", "!", "?", "(", ")", "[", "]", "\"", "'", "-",
    "\xC2\xA1", "\xC2\xBF", "\xC2\xAB", "\xC2\xBB", "/", "*"};

std::string_view StripPunctuation(std::string_view token) {
  bool changed = true;
  while (changed && !token.empty()) {
    changed = false;
    for (std::string_view p : kPunctuation) {
      if (token.size() >= p.size() && token.substr(0, p.size()) == p) {
        token.remove_prefix(p.size());
        changed = true;
      }
      if (token.size() >= p.size() &&
          token.substr(token.size() - p.size()) == p) {
        token.remove_suffix(p.size());
        changed = true;
      }
    }
  }
  return token;
}

}  // namespace

std::string NormalizeLemma(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_sep = false;
  size_t i = 0;
  while (i < text.size()) {
    if (IsSpace(text[i])) {
      pending_sep = !out.empty();
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    if (pending_sep) out.push_back('_');
    AppendLower(text.substr(i, j - i), &out);
    pending_sep = false;
    i = j;
  }
  return out;
}

std::vector<std::string> TokenizeDefinition(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    std::string_view word = StripPunctuation(text.substr(i, j - i));
    if (!word.empty()) {
      std::string lower;
      AppendLower(word, &lower);
      tokens.push_back(std::move(lower));
    }
    i = j;
  }
  return tokens;
}

std::vector<std::string> SplitFields(std::string_view text, char sep) {
  std::vector<std::string> fields;
  if (text.empty()) return fields;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(text.substr(start));
      break;
    }
    fields.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

std::string JoinFields(const std::vector<std::string> &fields,
                       std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(fields[i]);
  }
  return out;
}

}  // namespace lexiweave
