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

#ifndef LEXIWEAVE_LEMMA_H_
#define LEXIWEAVE_LEMMA_H_

#include <string>
#include <string_view>
#include <vector>

namespace lexiweave {

// Lowercases (ASCII and Latin-1 letters in UTF-8), trims, and joins internal
// whitespace runs with a single underscore. Accents are kept.
// Idempotent: NormalizeLemma(NormalizeLemma(x)) == NormalizeLemma(x).
std::string NormalizeLemma(std::string_view text);

// Splits a definition into normalized word tokens, dropping punctuation.
std::vector<std::string> TokenizeDefinition(std::string_view text);

// Splits on a single-character separator; empty input yields no fields.
std::vector<std::string> SplitFields(std::string_view text, char sep);

// Joins with a separator.
std::string JoinFields(const std::vector<std::string> &fields,
                       std::string_view sep);

}  // namespace lexiweave

#endif  // LEXIWEAVE_LEMMA_H_
