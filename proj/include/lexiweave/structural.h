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

#ifndef LEXIWEAVE_STRUCTURAL_H_
#define LEXIWEAVE_STRUCTURAL_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexiweave/bilingual.h"
#include "lexiweave/diagnostics.h"
#include "lexiweave/links.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

enum class StructuralCriterion { kIntersection, kParent, kBrother, kDistant };

inline constexpr std::array<StructuralCriterion, 4> kAllStructuralCriteria = {
    StructuralCriterion::kIntersection, StructuralCriterion::kParent,
    StructuralCriterion::kBrother, StructuralCriterion::kDistant};

std::string_view StructuralCriterionName(StructuralCriterion c);
StructuralCriterion ParseStructuralCriterion(std::string_view name);

// A source word, a subset (size >= 2) of its translations, and the synsets
// the criterion attached to it.
struct StructuralRecord {
  std::string source_word;
  std::set<std::string> ew_set;
  std::set<std::string> synsets;  // ids
  StructuralCriterion criterion = StructuralCriterion::kIntersection;

  auto operator<=>(const StructuralRecord &) const = default;
};

// Largest translation list the subset enumeration accepts.
inline constexpr size_t kMaxSubsetTranslations = 20;

// All subsets of size 2..n of the word's translations, ordered by size and
// then lexicographically. Fewer than 2 translations yields no subsets.
std::vector<std::vector<std::string>> EnumerateTranslationSubsets(
    const BilingualLexicon &hbil, std::string_view source_word);

// Over every source word and translation subset:
//   intersection  synsets shared by all EWs;
//   parent        some EW has a synset that is a direct hypernym of a synset
//                 of every other EW; those hyponym synsets are emitted;
//   brother       every EW has a synset under one common direct hypernym and
//                 at least two distinct such co-hyponyms exist; all emitted;
//   distant       as parent, with the hypernym an ancestor at minimum
//                 distance >= 2; the lower synsets are emitted.
// Output is sorted and duplicate-free.
std::vector<StructuralRecord> ApplyStructuralCriterion(
    const BilingualLexicon &hbil, const Taxonomy &tax,
    StructuralCriterion criterion);

// Drops every record whose ew_set is a strict subset of, and whose synsets
// are contained in, another record of the same word and criterion.
std::vector<StructuralRecord> PruneSubsumed(
    std::vector<StructuralRecord> records);

// One link per (word, synset) of the records, tagged with the criterion.
LinkSet RecordsToLinkSet(const std::vector<StructuralRecord> &records,
                         StructuralCriterion criterion);

struct SizeStratum {
  size_t judged = 0;
  double ok = 0;
  double ko = 0;
  double hypo = 0;
};

// Verdict proportions per translation-subset size. A verdict is bucketed by
// the largest ew_set among records of its method that emitted its link.
// Sizes with no verdicts are omitted. Throws std::invalid_argument when a
// verdict matches no record.
std::map<size_t, SizeStratum> StratifyBySize(
    const std::vector<StructuralRecord> &records,
    const std::vector<Verdict> &verdicts);

// `source_word <TAB> ew1,ew2 <TAB> synset_ids <TAB> criterion`.
std::string SerializeRecords(const std::vector<StructuralRecord> &records);
std::vector<StructuralRecord> ParseRecords(std::string_view text);

}  // namespace lexiweave

#endif  // LEXIWEAVE_STRUCTURAL_H_
