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

#include "lexiweave/structural.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"

namespace lexiweave {

namespace {

using SynsetList = std::vector<SynsetIndex>;

bool HasHypernym(const Taxonomy &tax, SynsetIndex child, SynsetIndex parent) {
  auto hs = tax.hypernyms(child);
  return std::find(hs.begin(), hs.end(), parent) != hs.end();
}

// Minimum hop distance from `ancestor` down to each descendant; -1 elsewhere.
std::vector<int> DownwardDistances(const Taxonomy &tax, SynsetIndex ancestor) {
  std::vector<int> dist(tax.size(), -1);
  std::deque<SynsetIndex> queue{ancestor};
  dist[ancestor] = 0;
  while (!queue.empty()) {
    SynsetIndex s = queue.front();
    queue.pop_front();
    for (SynsetIndex c : tax.hyponyms(s)) {
      if (dist[c] >= 0) continue;
      dist[c] = dist[s] + 1;
      queue.push_back(c);
    }
  }
  return dist;
}

std::set<SynsetIndex> Intersection(const std::vector<SynsetList> &lists) {
  std::set<SynsetIndex> common(lists[0].begin(), lists[0].end());
  for (size_t k = 1; k < lists.size(); ++k) {
    std::set<SynsetIndex> next;
    for (SynsetIndex s : lists[k]) {
      if (common.count(s)) next.insert(s);
    }
    common = std::move(next);
  }
  return common;
}

// Shared by parent and distant: some EW holds an upper synset `top` such that
// every other EW has a synset below it satisfying `below(c, top)`.
template <typename BelowFn>
std::set<SynsetIndex> HyponymSide(const std::vector<SynsetList> &lists,
                                  BelowFn below) {
  std::set<SynsetIndex> out;
  for (size_t e = 0; e < lists.size(); ++e) {
    for (SynsetIndex top : lists[e]) {
      std::set<SynsetIndex> hits;
      bool all = true;
      for (size_t other = 0; other < lists.size() && all; ++other) {
        if (other == e) continue;
        bool any = false;
        for (SynsetIndex c : lists[other]) {
          if (below(c, top)) {
            hits.insert(c);
            any = true;
          }
        }
        all = any;
      }
      if (all) out.insert(hits.begin(), hits.end());
    }
  }
  return out;
}

std::set<SynsetIndex> Brothers(const Taxonomy &tax,
                               const std::vector<SynsetList> &lists) {
  std::set<SynsetIndex> candidates;
  for (SynsetIndex c : lists[0]) {
    auto hs = tax.hypernyms(c);
    candidates.insert(hs.begin(), hs.end());
  }
  std::set<SynsetIndex> out;
  for (SynsetIndex parent : candidates) {
    std::set<SynsetIndex> siblings;
    bool all = true;
    for (const SynsetList &list : lists) {
      bool any = false;
      for (SynsetIndex c : list) {
        if (HasHypernym(tax, c, parent)) {
          siblings.insert(c);
          any = true;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all && siblings.size() >= 2) out.insert(siblings.begin(), siblings.end());
  }
  return out;
}

}  // namespace

std::string_view StructuralCriterionName(StructuralCriterion c) {
  switch (c) {
    case StructuralCriterion::kIntersection: return "intersection";
    case StructuralCriterion::kParent: return "parent";
    case StructuralCriterion::kBrother: return "brother";
    case StructuralCriterion::kDistant: return "distant";
  }
  return "intersection";
}

StructuralCriterion ParseStructuralCriterion(std::string_view name) {
  for (StructuralCriterion c : kAllStructuralCriteria) {
    if (StructuralCriterionName(c) == name) return c;
  }
  throw DataError("unknown structural criterion '" + std::string(name) + "'");
}

std::vector<std::vector<std::string>> EnumerateTranslationSubsets(
    const BilingualLexicon &hbil, std::string_view source_word) {
  std::vector<std::string> words = hbil.TranslationsOf(source_word);
  std::vector<std::vector<std::string>> out;
  const size_t n = words.size();
  if (n < 2) return out;
  if (n > kMaxSubsetTranslations) {
    throw DataError("'" + std::string(source_word) + "' has " +
                    std::to_string(n) + " translations; subset enumeration "
                    "is limited to " + std::to_string(kMaxSubsetTranslations));
  }
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) < 2) continue;
    std::vector<std::string> subset;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1UL << i)) subset.push_back(words[i]);
    }
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<StructuralRecord> ApplyStructuralCriterion(
    const BilingualLexicon &hbil, const Taxonomy &tax,
    StructuralCriterion criterion) {
  std::set<StructuralRecord> records;
  // Distances below each candidate ancestor, computed lazily.
  std::map<SynsetIndex, std::vector<int>> below_cache;
  auto distance_below = [&](SynsetIndex c, SynsetIndex top) {
    auto it = below_cache.find(top);
    if (it == below_cache.end()) {
      it = below_cache.emplace(top, DownwardDistances(tax, top)).first;
    }
    return it->second[c];
  };

  for (const auto &[source, positions] : hbil.by_source()) {
    for (const auto &subset : EnumerateTranslationSubsets(hbil, source)) {
      std::vector<SynsetList> lists;
      bool reachable = true;
      for (const std::string &ew : subset) {
        auto found = tax.SynsetsOf(ew);
        if (found.empty()) {
          reachable = false;
          break;
        }
        lists.emplace_back(found.begin(), found.end());
      }
      if (!reachable) continue;

      std::set<SynsetIndex> hits;
      switch (criterion) {
        case StructuralCriterion::kIntersection:
          hits = Intersection(lists);
          break;
        case StructuralCriterion::kParent:
          hits = HyponymSide(lists, [&](SynsetIndex c, SynsetIndex top) {
            return HasHypernym(tax, c, top);
          });
          break;
        case StructuralCriterion::kBrother:
          hits = Brothers(tax, lists);
          break;
        case StructuralCriterion::kDistant:
          hits = HyponymSide(lists, [&](SynsetIndex c, SynsetIndex top) {
            return distance_below(c, top) >= 2;
          });
          break;
      }
      if (hits.empty()) continue;
      StructuralRecord rec;
      rec.source_word = source;
      rec.ew_set.insert(subset.begin(), subset.end());
      for (SynsetIndex s : hits) rec.synsets.insert(tax.id(s));
      rec.criterion = criterion;
      records.insert(std::move(rec));
    }
  }
  return {records.begin(), records.end()};
}

std::vector<StructuralRecord> PruneSubsumed(
    std::vector<StructuralRecord> records) {
  std::sort(records.begin(), records.end());
  records.erase(std::unique(records.begin(), records.end()), records.end());
  auto subsumed_by = [](const StructuralRecord &r, const StructuralRecord &q) {
    return r.source_word == q.source_word && r.criterion == q.criterion &&
           r.ew_set.size() < q.ew_set.size() &&
           std::includes(q.ew_set.begin(), q.ew_set.end(), r.ew_set.begin(),
                         r.ew_set.end()) &&
           std::includes(q.synsets.begin(), q.synsets.end(),
                         r.synsets.begin(), r.synsets.end());
  };
  std::vector<StructuralRecord> kept;
  // Records are grouped by source word after sorting.
  size_t begin = 0;
  while (begin < records.size()) {
    size_t end = begin;
    while (end < records.size() &&
           records[end].source_word == records[begin].source_word) {
      ++end;
    }
    for (size_t i = begin; i < end; ++i) {
      bool drop = false;
      for (size_t j = begin; j < end && !drop; ++j) {
        drop = j != i && subsumed_by(records[i], records[j]);
      }
      if (!drop) kept.push_back(records[i]);
    }
    begin = end;
  }
  return kept;
}

LinkSet RecordsToLinkSet(const std::vector<StructuralRecord> &records,
                         StructuralCriterion criterion) {
  LinkSet out{std::string(StructuralCriterionName(criterion))};
  for (const StructuralRecord &r : records) {
    if (r.criterion != criterion) continue;
    for (const std::string &s : r.synsets) out.Add(r.source_word, s, r.ew_set);
  }
  return out;
}

std::map<size_t, SizeStratum> StratifyBySize(
    const std::vector<StructuralRecord> &records,
    const std::vector<Verdict> &verdicts) {
  std::map<size_t, DiagnosticCounts> counts;
  for (const Verdict &v : verdicts) {
    size_t size = 0;
    for (const StructuralRecord &r : records) {
      if (r.source_word == v.source_word &&
          StructuralCriterionName(r.criterion) == v.method &&
          r.synsets.count(v.synset)) {
        size = std::max(size, r.ew_set.size());
      }
    }
    if (size == 0) {
      throw std::invalid_argument("verdict on " + v.source_word + "->" +
                                  v.synset + " matches no " + v.method +
                                  " record");
    }
    counts[size].Add(v.diagnostic);
  }
  std::map<size_t, SizeStratum> out;
  for (const auto &[size, c] : counts) {
    double total = static_cast<double>(c.total());
    out[size] = {c.total(), c[Diagnostic::kOk] / total,
                 c[Diagnostic::kKo] / total, c[Diagnostic::kHypo] / total};
  }
  return out;
}

std::string SerializeRecords(const std::vector<StructuralRecord> &records) {
  std::string out;
  for (const StructuralRecord &r : records) {
    out += r.source_word + '\t' +
           JoinFields({r.ew_set.begin(), r.ew_set.end()}, ",") + '\t' +
           JoinFields({r.synsets.begin(), r.synsets.end()}, ",") + '\t' +
           std::string(StructuralCriterionName(r.criterion)) + '\n';
  }
  return out;
}

std::vector<StructuralRecord> ParseRecords(std::string_view text) {
  std::vector<StructuralRecord> out;
  size_t line_no = 0;
  for (const std::string &line : SplitFields(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    auto cols = SplitFields(line, '\t');
    if (cols.size() != 4) {
      throw DataError("line " + std::to_string(line_no) + ": expected 4 columns");
    }
    StructuralRecord r;
    r.source_word = cols[0];
    for (auto &e : SplitFields(cols[1], ',')) r.ew_set.insert(e);
    for (auto &s : SplitFields(cols[2], ',')) r.synsets.insert(s);
    r.criterion = ParseStructuralCriterion(cols[3]);
    if (r.ew_set.size() < 2 || r.synsets.empty()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": record needs >= 2 EWs and >= 1 synset");
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lexiweave
