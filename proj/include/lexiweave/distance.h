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

#ifndef LEXIWEAVE_DISTANCE_H_
#define LEXIWEAVE_DISTANCE_H_

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lexiweave/taxonomy.h"

namespace lexiweave {

inline constexpr double kInfiniteDistance =
    std::numeric_limits<double>::infinity();

// Path through the hypernym graph, edges taken in either direction. The cost
// counts every node, endpoints included, at 1/depth.
struct ConceptPath {
  std::vector<SynsetIndex> nodes;
  double cost = 0;
};

// Result of choosing one synset per word so that the words are closest.
// For two words `distance` is the cost of `path`; for more words it is the sum
// of the pairwise distances of the chosen tuple. A disconnected input gives
// kInfiniteDistance and empty `chosen`.
struct DistanceResult {
  double distance = kInfiniteDistance;
  std::vector<SynsetIndex> chosen;
  std::optional<ConceptPath> path;

  bool connected() const { return !chosen.empty(); }
};

// Exhaustive tuple search up to this many words; greedy coordinate descent
// beyond.
inline constexpr size_t kExhaustiveWordLimit = 4;

// Cost of the cheapest path between two synsets (node-weighted Dijkstra).
std::optional<ConceptPath> CheapestPath(const Taxonomy &tax, SynsetIndex from,
                                        SynsetIndex to);

// Conceptual distance between words given as their synset sets (one non-empty
// set per word, at least two words). Ties are broken towards the
// lexicographically smallest tuple of synset ids. Throws std::invalid_argument
// on fewer than two words or an empty set.
DistanceResult ConceptualDistance(
    const Taxonomy &tax, std::span<const std::vector<SynsetIndex>> words);

}  // namespace lexiweave

#endif  // LEXIWEAVE_DISTANCE_H_
