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

#ifndef LEXIWEAVE_CD_METHODS_H_
#define LEXIWEAVE_CD_METHODS_H_

#include <string_view>
#include <vector>

#include "lexiweave/bilingual.h"
#include "lexiweave/cooccurrence.h"
#include "lexiweave/links.h"
#include "lexiweave/monolingual.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

// Synsets reachable from a source word through all its translations.
std::vector<SynsetIndex> TranslateToSynsets(const BilingualLexicon &hbil,
                                            const Taxonomy &tax,
                                            std::string_view source_word);

// cd1: co-occurring headword pairs. Both words are linked to their chosen
// synsets; scores are the pair's association ratio mapped to (0,1] by dense
// rank (highest AR -> 1).
LinkSet RunCd1(const std::vector<CoocPair> &pairs, const BilingualLexicon &hbil,
               const Taxonomy &tax);

// cd2: headword and genus of each definition that names one.
LinkSet RunCd2(const MonolingualDictionary &mono, const BilingualLexicon &hbil,
               const Taxonomy &tax);

// cd3: a source word with several translations is linked to the synset chosen
// for each of its translations.
LinkSet RunCd3(const BilingualLexicon &hbil, const Taxonomy &tax);

}  // namespace lexiweave

#endif  // LEXIWEAVE_CD_METHODS_H_
