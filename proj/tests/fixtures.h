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

#ifndef LEXIWEAVE_TESTS_FIXTURES_H_
#define LEXIWEAVE_TESTS_FIXTURES_H_

#include <string>

#include "lexiweave/bilingual.h"
#include "lexiweave/monolingual.h"
#include "lexiweave/taxonomy.h"

#ifndef LEXIWEAVE_TEST_DATA
#error "LEXIWEAVE_TEST_DATA must point at tests/data"
#endif

namespace lexiweave::testing {

inline std::string DataPath(const std::string &name) {
  return std::string(LEXIWEAVE_TEST_DATA) + "/" + name;
}

inline Taxonomy LoadT14() {
  return LoadTaxonomy(DataPath("t14.tsv"), TaxonomyFormat::kTsv);
}

// The twelve pairs used by the class-method and combiner examples.
inline BilingualLexicon LoadHb14Core() {
  return MergeBilinguals(
      LoadBilingual(DataPath("hb14_es_en.tsv"), Origin::kEsEn),
      LoadBilingual(DataPath("hb14_en_es.tsv"), Origin::kEnEs));
}

// Core plus the structural-criteria pairs: the full twenty-pair listing.
inline BilingualLexicon LoadHb14Full() {
  BilingualLexicon core = LoadHb14Core();
  BilingualLexicon extra =
      LoadBilingual(DataPath("hb14_struct_es_en.tsv"), Origin::kEsEn);
  return MergeBilinguals(core, extra);
}

inline MonolingualDictionary LoadM14() {
  return LoadMonolingual(DataPath("m14.jsonl"));
}

}  // namespace lexiweave::testing

#endif  // LEXIWEAVE_TESTS_FIXTURES_H_
