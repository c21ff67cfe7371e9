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

#ifndef LEXIWEAVE_TAXONOMY_H_
#define LEXIWEAVE_TAXONOMY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexiweave {

// Dense position of a synset inside a Taxonomy.
using SynsetIndex = std::uint32_t;

// A lexicalized concept: synonymous variants plus is-a parents.
struct Synset {
  std::string id;
  std::vector<std::string> variants;   // normalized lemmas, file order
  std::vector<std::string> hypernyms;  // synset ids
};

enum class TaxonomyFormat { kTsv, kWndb };

// Immutable hypernym DAG with a depth index and a lemma index. Only the
// hypernym/hyponym relation is represented.
//
// Depth: roots have depth 1; every other synset has 1 + the minimum depth of
// its hypernyms. Multiple roots are allowed and no virtual root is added.
class Taxonomy {
 public:
  // Validates and indexes. Throws DataError on empty input, duplicate ids,
  // empty variant lists, dangling hypernyms, or cycles ("cycle at <id>").
  static Taxonomy Build(std::vector<Synset> synsets);

  size_t size() const { return synsets_.size(); }
  const Synset &synset(SynsetIndex i) const { return synsets_[i]; }
  const std::string &id(SynsetIndex i) const { return synsets_[i].id; }
  std::optional<SynsetIndex> Find(std::string_view id) const;

  int depth(SynsetIndex i) const { return depth_[i]; }
  std::span<const SynsetIndex> hypernyms(SynsetIndex i) const {
    return hypernyms_[i];
  }
  std::span<const SynsetIndex> hyponyms(SynsetIndex i) const {
    return hyponyms_[i];
  }
  const std::vector<SynsetIndex> &roots() const { return roots_; }

  // Synsets containing the lemma, ordered by id. Empty if absent.
  std::span<const SynsetIndex> SynsetsOf(std::string_view lemma) const;
  bool Contains(std::string_view lemma) const;
  const std::map<std::string, std::vector<SynsetIndex>, std::less<>> &
  lemma_index() const {
    return lemma_index_;
  }

  // Number of (lemma, synset) memberships.
  size_t connection_count() const;

  // Minimum number of hypernym hops from `from` up to `ancestor`, or nullopt
  // when `ancestor` is not reachable upwards. Zero when equal.
  std::optional<int> UpwardDistance(SynsetIndex from,
                                    SynsetIndex ancestor) const;
  bool IsStrictAncestor(SynsetIndex ancestor, SynsetIndex of) const;

  // Hypernym chain from i to a root following the lowest-id hypernym.
  std::vector<SynsetIndex> HypernymChain(SynsetIndex i) const;

 private:
  Taxonomy() = default;

  std::vector<Synset> synsets_;
  std::unordered_map<std::string, SynsetIndex> by_id_;
  std::vector<std::vector<SynsetIndex>> hypernyms_;
  std::vector<std::vector<SynsetIndex>> hyponyms_;
  std::vector<SynsetIndex> roots_;
  std::vector<int> depth_;
  std::map<std::string, std::vector<SynsetIndex>, std::less<>> lemma_index_;
};

// Computes per-synset depth (roots 1, else 1 + min over hypernyms) for a
// parent-list graph. Throws DataError("cycle at <id>") if the graph is cyclic.
std::vector<int> ComputeDepths(
    const std::vector<std::vector<SynsetIndex>> &hypernyms,
    const std::vector<std::string> &ids);

// Parses the TSV taxonomy format:
//   synset_id <TAB> variant1|variant2|... <TAB> hypernym_id1,hypernym_id2,...
Taxonomy ParseTaxonomyTsv(std::string_view text);

// Parses a Princeton-style data.noun file, keeping only '@' pointers.
Taxonomy ParseWndbData(std::string_view text);

// Reads a taxonomy from disk. For kWndb, `path` may be a data.noun file or a
// directory containing data.noun.
Taxonomy LoadTaxonomy(const std::string &path, TaxonomyFormat format);

TaxonomyFormat ParseTaxonomyFormat(std::string_view name);

// Reads a whole file; throws DataError if unreadable.
std::string ReadFile(const std::string &path);

}  // namespace lexiweave

#endif  // LEXIWEAVE_TAXONOMY_H_
