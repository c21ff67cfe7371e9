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

#include "lexiweave/coverage.h"

#include <set>
#include <string>
#include <utility>

namespace lexiweave {

namespace {

double Ratio(size_t part, size_t total) {
  return total == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(total);
}

}  // namespace

double CoverageReport::english_of_wordnet() const {
  return Ratio(reachable_english, english_nouns);
}
double CoverageReport::synsets_of_wordnet() const {
  return Ratio(reachable_synsets, synsets);
}
double CoverageReport::english_of_bilingual() const {
  return Ratio(reachable_english, bilingual_english);
}
double CoverageReport::source_of_bilingual() const {
  return Ratio(reachable_source, source_nouns);
}

CoverageReport ComputeCoverage(const BilingualLexicon &hbil,
                               const Taxonomy &tax) {
  CoverageReport r;
  r.english_nouns = tax.lemma_index().size();
  r.synsets = tax.size();
  r.wordnet_connections = tax.connection_count();
  r.bilingual_english = hbil.by_target().size();
  r.source_nouns = hbil.by_source().size();
  r.connections = hbil.size();

  std::set<SynsetIndex> synsets;
  std::set<std::string> sources;
  std::set<std::pair<std::string, SynsetIndex>> links;
  for (const auto &[target, positions] : hbil.by_target()) {
    auto found = tax.SynsetsOf(target);
    if (found.empty()) continue;
    ++r.reachable_english;
    synsets.insert(found.begin(), found.end());
    for (size_t i : positions) {
      const std::string &source = hbil.pairs()[i].source_lemma;
      sources.insert(source);
      for (SynsetIndex s : found) links.emplace(source, s);
    }
  }
  r.reachable_synsets = synsets.size();
  r.reachable_source = sources.size();
  r.reachable_connections = links.size();
  return r;
}

nlohmann::json CoverageToJson(const CoverageReport &r) {
  return {
      {"wordnet",
       {{"english_nouns", r.english_nouns},
        {"synsets", r.synsets},
        {"connections", r.wordnet_connections}}},
      {"bilingual",
       {{"english_nouns", r.bilingual_english},
        {"source_nouns", r.source_nouns},
        {"connections", r.connections}}},
      {"reachable",
       {{"english_nouns", r.reachable_english},
        {"source_nouns", r.reachable_source},
        {"synsets", r.reachable_synsets},
        {"connections", r.reachable_connections}}},
      {"ratios",
       {{"english_of_wordnet", r.english_of_wordnet()},
        {"synsets_of_wordnet", r.synsets_of_wordnet()},
        {"english_of_bilingual", r.english_of_bilingual()},
        {"source_of_bilingual", r.source_of_bilingual()}}},
  };
}

}  // namespace lexiweave
