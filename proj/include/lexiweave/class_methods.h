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

#ifndef LEXIWEAVE_CLASS_METHODS_H_
#define LEXIWEAVE_CLASS_METHODS_H_

#include <optional>
#include <string>
#include <vector>

#include "lexiweave/bilingual.h"
#include "lexiweave/links.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

enum class WordClass { kMono, kPoly };

// Fanout shape of one (source word, English word) pair:
//   1 = 1:1, 2 = 1:N (SW has several translations), 3 = M:1 (EW has several
//   back-translations), 4 = M:N.
// Mono/poly refers to the English word's synset count in the taxonomy.
struct PairShape {
  size_t sw_fanout = 0;    // N
  size_t ew_fanout = 0;    // M
  size_t ew_polysemy = 0;  // synsets of EW
  int shape = 0;
  WordClass word_class = WordClass::kMono;
};

// "mono1" ... "poly4".
std::string ClassCriterionTag(WordClass word_class, int shape);

// Pairs that carry a field identifier are sense-restricted and belong to the
// field criterion only: they are neither classified nor counted in the
// fanouts of other pairs. Returns nullopt for such pairs and for pairs whose
// English word is absent from the taxonomy.
std::optional<PairShape> ClassifyPair(const BilingualLexicon &hbil,
                                      const Taxonomy &tax,
                                      const TranslationPair &pair);

// Links SW to the unique synset (mono) or every synset (poly) of EW for each
// pair in the (word_class, shape) cell.
LinkSet ApplyClassCriterion(const BilingualLexicon &hbil, const Taxonomy &tax,
                            WordClass word_class, int shape);

// Links SW to a synset when at least two of the synset's variants have SW as
// their only translation.
LinkSet ApplyVariant(const BilingualLexicon &hbil, const Taxonomy &tax);

// For each pair with field identifier f, links SW to every synset of EW that
// also has f as a variant.
LinkSet ApplyField(const BilingualLexicon &hbil, const Taxonomy &tax);

// All ten class criteria in tag order (mono1..4, poly1..4, variant, field).
std::vector<LinkSet> RunClassMethods(const BilingualLexicon &hbil,
                                     const Taxonomy &tax);

}  // namespace lexiweave

#endif  // LEXIWEAVE_CLASS_METHODS_H_
