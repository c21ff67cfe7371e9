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

#include "lexiweave/class_methods.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lexiweave {

namespace {

size_t FieldFreeCount(const BilingualLexicon &hbil,
                      std::span<const size_t> positions) {
  size_t n = 0;
  for (size_t i : positions) {
    if (!hbil.pairs()[i].field_id) ++n;
  }
  return n;
}

int ShapeOf(size_t sw_fanout, size_t ew_fanout) {
  if (sw_fanout == 1) return ew_fanout == 1 ? 1 : 3;
  return ew_fanout == 1 ? 2 : 4;
}

}  // namespace

std::string ClassCriterionTag(WordClass word_class, int shape) {
  if (shape < 1 || shape > 4) throw std::invalid_argument("shape must be 1..4");
  return (word_class == WordClass::kMono ? "mono" : "poly") +
         std::to_string(shape);
}

std::optional<PairShape> ClassifyPair(const BilingualLexicon &hbil,
                                      const Taxonomy &tax,
                                      const TranslationPair &pair) {
  if (pair.field_id) return std::nullopt;
  auto synsets = tax.SynsetsOf(pair.target_lemma);
  if (synsets.empty()) return std::nullopt;
  PairShape shape;
  shape.sw_fanout = FieldFreeCount(hbil, hbil.BySource(pair.source_lemma));
  shape.ew_fanout = FieldFreeCount(hbil, hbil.ByTarget(pair.target_lemma));
  shape.ew_polysemy = synsets.size();
  shape.shape = ShapeOf(shape.sw_fanout, shape.ew_fanout);
  shape.word_class =
      shape.ew_polysemy == 1 ? WordClass::kMono : WordClass::kPoly;
  return shape;
}

LinkSet ApplyClassCriterion(const BilingualLexicon &hbil, const Taxonomy &tax,
                            WordClass word_class, int shape) {
  LinkSet out(ClassCriterionTag(word_class, shape));
  for (const TranslationPair &pair : hbil.pairs()) {
    auto ps = ClassifyPair(hbil, tax, pair);
    if (!ps || ps->shape != shape || ps->word_class != word_class) continue;
    for (SynsetIndex s : tax.SynsetsOf(pair.target_lemma)) {
      out.Add(pair.source_lemma, tax.id(s), {pair.target_lemma});
    }
  }
  return out;
}

LinkSet ApplyVariant(const BilingualLexicon &hbil, const Taxonomy &tax) {
  LinkSet out("variant");
  for (SynsetIndex s = 0; s < tax.size(); ++s) {
    const auto &variants = tax.synset(s).variants;
    if (variants.size() < 2) continue;
    std::map<std::string, std::set<std::string>> sole_translation;
    for (const std::string &ew : variants) {
      auto back = hbil.ByTarget(ew);
      if (back.size() != 1) continue;
      sole_translation[hbil.pairs()[back.front()].source_lemma].insert(ew);
    }
    for (auto &[sw, ews] : sole_translation) {
      if (ews.size() >= 2) out.Add(sw, tax.id(s), ews);
    }
  }
  return out;
}

LinkSet ApplyField(const BilingualLexicon &hbil, const Taxonomy &tax) {
  LinkSet out("field");
  for (const TranslationPair &pair : hbil.pairs()) {
    if (!pair.field_id) continue;
    for (SynsetIndex s : tax.SynsetsOf(pair.target_lemma)) {
      const auto &variants = tax.synset(s).variants;
      if (std::find(variants.begin(), variants.end(), *pair.field_id) !=
          variants.end()) {
        out.Add(pair.source_lemma, tax.id(s),
                {pair.target_lemma, *pair.field_id});
      }
    }
  }
  return out;
}

std::vector<LinkSet> RunClassMethods(const BilingualLexicon &hbil,
                                     const Taxonomy &tax) {
  std::vector<LinkSet> out;
  for (WordClass wc : {WordClass::kMono, WordClass::kPoly}) {
    for (int shape = 1; shape <= 4; ++shape) {
      out.push_back(ApplyClassCriterion(hbil, tax, wc, shape));
    }
  }
  out.push_back(ApplyVariant(hbil, tax));
  out.push_back(ApplyField(hbil, tax));
  return out;
}

}  // namespace lexiweave
