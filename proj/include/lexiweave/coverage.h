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

#ifndef LEXIWEAVE_COVERAGE_H_
#define LEXIWEAVE_COVERAGE_H_

#include <cstddef>

#include "json.hpp"
#include "lexiweave/bilingual.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

// How much of the taxonomy a bilingual lexicon can reach. Counts are reported
// per unit; connections mean lemma/synset memberships for the taxonomy,
// translation pairs for the bilingual, and source-word/synset links for the
// reachable part.
struct CoverageReport {
  size_t english_nouns = 0;          // lemmas in the taxonomy
  size_t synsets = 0;
  size_t wordnet_connections = 0;
  size_t bilingual_english = 0;      // distinct target lemmas
  size_t source_nouns = 0;           // distinct source lemmas
  size_t connections = 0;            // translation pairs
  size_t reachable_english = 0;
  size_t reachable_source = 0;
  size_t reachable_synsets = 0;
  size_t reachable_connections = 0;

  // reachable / total, 0 when the total is 0.
  double english_of_wordnet() const;
  double synsets_of_wordnet() const;
  double english_of_bilingual() const;
  double source_of_bilingual() const;
};

CoverageReport ComputeCoverage(const BilingualLexicon &hbil,
                               const Taxonomy &tax);

nlohmann::json CoverageToJson(const CoverageReport &report);

}  // namespace lexiweave

#endif  // LEXIWEAVE_COVERAGE_H_
