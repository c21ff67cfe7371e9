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

#ifndef LEXIWEAVE_COOCCURRENCE_H_
#define LEXIWEAVE_COOCCURRENCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexiweave/monolingual.h"

namespace lexiweave {

// Two headwords appearing together in dictionary definitions. Counts are
// numbers of definitions; word_a < word_b.
struct CoocPair {
  std::string word_a;
  std::string word_b;
  size_t count_ab = 0;
  size_t count_a = 0;
  size_t count_b = 0;
  size_t n_defs = 0;
  std::optional<double> ar;

  bool operator==(const CoocPair &) const = default;
};

// log2(P(a,b) / (P(a) P(b))) with definition-level relative frequencies.
// nullopt when any count is zero.
std::optional<double> AssociationRatio(size_t count_ab, size_t count_a,
                                       size_t count_b, size_t n_defs);
std::optional<double> AssociationRatio(const CoocPair &pair);

// Pairs of distinct headwords that occur as tokens of the same definition,
// sorted by (word_a, word_b). Only tokens that are headwords count.
std::vector<CoocPair> ExtractCooccurrences(const MonolingualDictionary &mono);

// `word_a <TAB> word_b <TAB> count_ab <TAB> count_a <TAB> count_b <TAB>
// n_defs <TAB> ar`.
std::string SerializeCooccurrences(const std::vector<CoocPair> &pairs);
std::vector<CoocPair> ParseCooccurrences(std::string_view text);

}  // namespace lexiweave

#endif  // LEXIWEAVE_COOCCURRENCE_H_
