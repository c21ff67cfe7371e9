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

#include "lexiweave/cd_methods.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "lexiweave/distance.h"

namespace lexiweave {

namespace {

// English translations of `source` that contain synset `s`.
std::set<std::string> Evidence(const BilingualLexicon &hbil,
                               const Taxonomy &tax, std::string_view source,
                               SynsetIndex s) {
  std::set<std::string> out;
  for (const std::string &ew : hbil.TranslationsOf(source)) {
    auto found = tax.SynsetsOf(ew);
    if (std::find(found.begin(), found.end(), s) != found.end()) out.insert(ew);
  }
  return out;
}

}  // namespace

std::vector<SynsetIndex> TranslateToSynsets(const BilingualLexicon &hbil,
                                            const Taxonomy &tax,
                                            std::string_view source_word) {
  std::set<SynsetIndex> out;
  for (const std::string &ew : hbil.TranslationsOf(source_word)) {
    auto found = tax.SynsetsOf(ew);
    out.insert(found.begin(), found.end());
  }
  return {out.begin(), out.end()};
}

LinkSet RunCd1(const std::vector<CoocPair> &pairs, const BilingualLexicon &hbil,
               const Taxonomy &tax) {
  struct Hit {
    std::string word;
    SynsetIndex synset;
    double ar;
  };
  std::vector<Hit> hits;
  std::set<double, std::greater<>> distinct_ar;
  for (const CoocPair &p : pairs) {
    if (!p.ar) continue;
    std::vector<std::vector<SynsetIndex>> words = {
        TranslateToSynsets(hbil, tax, p.word_a),
        TranslateToSynsets(hbil, tax, p.word_b)};
    if (words[0].empty() || words[1].empty()) continue;
    DistanceResult r = ConceptualDistance(tax, words);
    if (!r.connected()) continue;
    hits.push_back({p.word_a, r.chosen[0], *p.ar});
    hits.push_back({p.word_b, r.chosen[1], *p.ar});
    distinct_ar.insert(*p.ar);
  }
  std::map<double, double> score_of;
  const double ranks = static_cast<double>(distinct_ar.size());
  double rank = 0;
  for (double ar : distinct_ar) {
    score_of[ar] = (ranks - rank) / ranks;
    ++rank;
  }
  LinkSet out("cd1");
  for (const Hit &h : hits) {
    out.Add(h.word, tax.id(h.synset), Evidence(hbil, tax, h.word, h.synset),
            score_of[h.ar]);
  }
  return out;
}

LinkSet RunCd2(const MonolingualDictionary &mono, const BilingualLexicon &hbil,
               const Taxonomy &tax) {
  LinkSet out("cd2");
  for (const MonolingualEntry &e : mono.entries()) {
    if (!e.genus) continue;
    std::vector<std::vector<SynsetIndex>> words = {
        TranslateToSynsets(hbil, tax, e.headword),
        TranslateToSynsets(hbil, tax, *e.genus)};
    if (words[0].empty() || words[1].empty()) continue;
    DistanceResult r = ConceptualDistance(tax, words);
    if (!r.connected()) continue;
    out.Add(e.headword, tax.id(r.chosen[0]),
            Evidence(hbil, tax, e.headword, r.chosen[0]));
    out.Add(*e.genus, tax.id(r.chosen[1]),
            Evidence(hbil, tax, *e.genus, r.chosen[1]));
  }
  return out;
}

LinkSet RunCd3(const BilingualLexicon &hbil, const Taxonomy &tax) {
  LinkSet out("cd3");
  for (const auto &[source, positions] : hbil.by_source()) {
    std::vector<std::vector<SynsetIndex>> words;
    std::vector<std::string> ews;
    for (size_t i : positions) {
      const std::string &ew = hbil.pairs()[i].target_lemma;
      auto found = tax.SynsetsOf(ew);
      if (found.empty()) continue;
      words.emplace_back(found.begin(), found.end());
      ews.push_back(ew);
    }
    if (words.size() < 2) continue;
    DistanceResult r = ConceptualDistance(tax, words);
    if (!r.connected()) continue;
    for (size_t k = 0; k < r.chosen.size(); ++k) {
      out.Add(source, tax.id(r.chosen[k]), {ews[k]});
    }
  }
  return out;
}

}  // namespace lexiweave
