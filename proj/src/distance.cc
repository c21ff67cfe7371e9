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

#include "lexiweave/distance.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

namespace lexiweave {

namespace {

constexpr double kTieEpsilon = 1e-12;

double NodeWeight(const Taxonomy &tax, SynsetIndex s) {
  return 1.0 / static_cast<double>(tax.depth(s));
}

struct SearchTree {
  std::vector<double> cost;
  std::vector<SynsetIndex> prev;
};

// Node-weighted Dijkstra from `source`; stops once every target is settled.
SearchTree Search(const Taxonomy &tax, SynsetIndex source,
                  std::span<const SynsetIndex> targets) {
  const size_t n = tax.size();
  SearchTree tree{std::vector<double>(n, kInfiniteDistance),
                  std::vector<SynsetIndex>(n, source)};
  std::vector<bool> settled(n, false);
  std::vector<bool> wanted(n, false);
  size_t remaining = 0;
  for (SynsetIndex t : targets) {
    if (!wanted[t]) {
      wanted[t] = true;
      ++remaining;
    }
  }
  using Entry = std::pair<double, SynsetIndex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  tree.cost[source] = NodeWeight(tax, source);
  heap.emplace(tree.cost[source], source);
  while (!heap.empty() && remaining > 0) {
    auto [c, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    if (wanted[u]) --remaining;
    auto relax = [&](SynsetIndex v) {
      double next = c + NodeWeight(tax, v);
      if (next < tree.cost[v]) {
        tree.cost[v] = next;
        tree.prev[v] = u;
        heap.emplace(next, v);
      }
    };
    for (SynsetIndex v : tax.hypernyms(u)) relax(v);
    for (SynsetIndex v : tax.hyponyms(u)) relax(v);
  }
  return tree;
}

ConceptPath Trace(const SearchTree &tree, SynsetIndex from, SynsetIndex to) {
  ConceptPath path;
  path.cost = tree.cost[to];
  for (SynsetIndex s = to; s != from; s = tree.prev[s]) path.nodes.push_back(s);
  path.nodes.push_back(from);
  std::reverse(path.nodes.begin(), path.nodes.end());
  return path;
}

std::vector<SynsetIndex> SortedById(const Taxonomy &tax,
                                    std::vector<SynsetIndex> list) {
  std::sort(list.begin(), list.end(), [&tax](SynsetIndex a, SynsetIndex b) {
    return tax.id(a) < tax.id(b);
  });
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

DistanceResult TwoWords(const Taxonomy &tax,
                        const std::vector<SynsetIndex> &first,
                        const std::vector<SynsetIndex> &second) {
  DistanceResult best;
  for (SynsetIndex a : first) {
    SearchTree tree = Search(tax, a, second);
    for (SynsetIndex b : second) {
      double d = tree.cost[b];
      if (d < best.distance - kTieEpsilon) {
        best.distance = d;
        best.chosen = {a, b};
        best.path = Trace(tree, a, b);
      }
    }
  }
  return best;
}

// Pairwise synset distances among all candidate synsets.
class DistanceTable {
 public:
  DistanceTable(const Taxonomy &tax, std::vector<SynsetIndex> all)
      : all_(std::move(all)) {
    for (SynsetIndex s : all_) {
      SearchTree tree = Search(tax, s, all_);
      for (SynsetIndex t : all_) table_[{s, t}] = tree.cost[t];
    }
  }
  double operator()(SynsetIndex a, SynsetIndex b) const {
    return table_.at({a, b});
  }

 private:
  std::vector<SynsetIndex> all_;
  std::map<std::pair<SynsetIndex, SynsetIndex>, double> table_;
};

double TupleCost(const DistanceTable &dist,
                 const std::vector<SynsetIndex> &tuple) {
  double total = 0;
  for (size_t i = 0; i < tuple.size(); ++i) {
    for (size_t j = i + 1; j < tuple.size(); ++j) total += dist(tuple[i], tuple[j]);
  }
  return total;
}

void Exhaustive(const DistanceTable &dist,
                const std::vector<std::vector<SynsetIndex>> &words,
                std::vector<SynsetIndex> &tuple, DistanceResult &best) {
  if (tuple.size() == words.size()) {
    double cost = TupleCost(dist, tuple);
    if (cost < best.distance - kTieEpsilon) {
      best.distance = cost;
      best.chosen = tuple;
    }
    return;
  }
  for (SynsetIndex s : words[tuple.size()]) {
    tuple.push_back(s);
    Exhaustive(dist, words, tuple, best);
    tuple.pop_back();
  }
}

// Greedy build from each seed of the first word, then coordinate descent.
DistanceResult Greedy(const DistanceTable &dist,
                      const std::vector<std::vector<SynsetIndex>> &words) {
  DistanceResult best;
  for (SynsetIndex seed : words[0]) {
    std::vector<SynsetIndex> tuple{seed};
    for (size_t w = 1; w < words.size(); ++w) {
      SynsetIndex pick = words[w][0];
      double pick_cost = kInfiniteDistance;
      for (SynsetIndex s : words[w]) {
        double c = 0;
        for (SynsetIndex t : tuple) c += dist(s, t);
        if (c < pick_cost - kTieEpsilon) {
          pick_cost = c;
          pick = s;
        }
      }
      tuple.push_back(pick);
    }
    double cost = TupleCost(dist, tuple);
    for (bool improved = true; improved;) {
      improved = false;
      for (size_t w = 0; w < words.size(); ++w) {
        for (SynsetIndex s : words[w]) {
          if (s == tuple[w]) continue;
          std::vector<SynsetIndex> trial = tuple;
          trial[w] = s;
          double c = TupleCost(dist, trial);
          if (c < cost - kTieEpsilon) {
            cost = c;
            tuple = std::move(trial);
            improved = true;
          }
        }
      }
    }
    if (cost < best.distance - kTieEpsilon) {
      best.distance = cost;
      best.chosen = tuple;
    }
  }
  return best;
}

}  // namespace

std::optional<ConceptPath> CheapestPath(const Taxonomy &tax, SynsetIndex from,
                                        SynsetIndex to) {
  SynsetIndex target[] = {to};
  SearchTree tree = Search(tax, from, target);
  if (tree.cost[to] == kInfiniteDistance) return std::nullopt;
  return Trace(tree, from, to);
}

DistanceResult ConceptualDistance(
    const Taxonomy &tax, std::span<const std::vector<SynsetIndex>> words) {
  if (words.size() < 2) {
    throw std::invalid_argument("conceptual distance needs at least two words");
  }
  std::vector<std::vector<SynsetIndex>> sorted;
  std::vector<SynsetIndex> all;
  for (const auto &w : words) {
    if (w.empty()) throw std::invalid_argument("word without synsets");
    for (SynsetIndex s : w) {
      if (s >= tax.size()) throw std::invalid_argument("synset out of range");
    }
    sorted.push_back(SortedById(tax, w));
    all.insert(all.end(), w.begin(), w.end());
  }
  if (sorted.size() == 2) {
    DistanceResult r = TwoWords(tax, sorted[0], sorted[1]);
    if (!r.connected()) r.distance = kInfiniteDistance;
    return r;
  }
  DistanceTable dist(tax, SortedById(tax, std::move(all)));
  DistanceResult r;
  if (sorted.size() <= kExhaustiveWordLimit) {
    std::vector<SynsetIndex> tuple;
    Exhaustive(dist, sorted, tuple, r);
  } else {
    r = Greedy(dist, sorted);
  }
  if (r.distance == kInfiniteDistance) r.chosen.clear();
  return r;
}

}  // namespace lexiweave
