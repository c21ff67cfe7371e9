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

#ifndef LEXIWEAVE_COMBINER_H_
#define LEXIWEAVE_COMBINER_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexiweave/links.h"

namespace lexiweave {

inline constexpr double kDefaultThreshold = 0.85;

// Base methods of the first wordnet version.
const std::vector<std::string> &DefaultBaseMethods();

struct WordnetLink {
  std::string source_word;
  std::string synset;
  std::optional<double> cs;
  std::set<std::string> provenance;  // method and cell tags
};

struct WordnetStats {
  size_t links = 0;
  size_t synsets = 0;
  size_t words = 0;
  size_t poly_links = 0;  // links whose word holds more than one link
  std::optional<double> cs;  // mean per-link CS over links that have one

  bool operator==(const WordnetStats &) const = default;
};

struct Wordnet {
  std::string version;
  std::map<LinkKey, WordnetLink> links;

  // Adds or merges: provenance is united, CS is the maximum.
  void Add(const WordnetLink &link);
};

WordnetStats ComputeWordnetStats(const Wordnet &wn);

// Union of the accepted methods' links. Each link's CS is the maximum CS of
// its contributing methods (unset when none has a CS). Throws
// std::invalid_argument for a tag missing from `linksets`.
Wordnet BuildBaseWordnet(const std::map<std::string, LinkSet> &linksets,
                         const std::vector<std::string> &accepted_methods,
                         const std::map<std::string, double> &method_cs);

struct IntersectionCell {
  std::string method_a;
  std::string method_b;
  LinkSet links;
  std::optional<double> cs;
  bool accepted = false;

  std::string tag() const { return CellTag(method_a, method_b); }
};

// Links present in both sets on (source word, synset). Throws
// std::invalid_argument when both sets carry the same method.
IntersectionCell IntersectLinksets(const LinkSet &a, const LinkSet &b);

// Every unordered pair of the given methods, in order of appearance.
std::vector<IntersectionCell> IntersectAll(
    const std::map<std::string, LinkSet> &linksets,
    const std::vector<std::string> &methods);

// Marks cells whose CS (from `cell_cs`, keyed by cell tag) is >= threshold and
// returns the deduplicated union of their links, each with the maximum
// accepting cell CS. Throws std::invalid_argument unless threshold in [0,1].
std::vector<WordnetLink> SelectAcceptedCells(
    std::vector<IntersectionCell> &cells,
    const std::map<std::string, double> &cell_cs, double threshold);

struct Assembly {
  Wordnet wordnet;
  size_t new_links = 0;
  double increase = 0;  // new_links / |base|, 0 for an empty base
};

// Base plus accepted links, relabelled `version`.
Assembly AssembleWordnet(const Wordnet &base,
                         const std::vector<WordnetLink> &accepted,
                         std::string version = "v0.1");

// `source_word <TAB> synset_id <TAB> cs <TAB> provenance(;-separated)`.
std::string SerializeWordnet(const Wordnet &wn);
Wordnet ParseWordnet(std::string_view text, std::string version);

nlohmann::json StatsToJson(const std::string &version, const WordnetStats &s);

}  // namespace lexiweave

#endif  // LEXIWEAVE_COMBINER_H_
