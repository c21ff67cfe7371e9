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

#ifndef LEXIWEAVE_BILINGUAL_H_
#define LEXIWEAVE_BILINGUAL_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexiweave {

// Direction a translation pair was read from. Pairs found in both directions
// become kMerged.
enum class Origin { kEsEn, kEnEs, kMerged };

std::string_view OriginName(Origin origin);
Origin ParseOrigin(std::string_view name);

// One source-word/English-word translation. Always stored source-first,
// whatever direction the dictionary was read in.
struct TranslationPair {
  std::string source_lemma;
  std::string target_lemma;
  std::optional<std::string> field_id;  // only from English/source entries
  Origin origin = Origin::kEsEn;

  bool operator==(const TranslationPair &) const = default;
};

// A set of translation pairs keyed on (source_lemma, target_lemma), with
// lookup indexes in both directions. Immutable once built.
class BilingualLexicon {
 public:
  BilingualLexicon() = default;

  // Deduplicates on (source, target). Duplicates keep the first field id seen
  // and become kMerged when their origins differ.
  explicit BilingualLexicon(std::vector<TranslationPair> pairs);

  const std::vector<TranslationPair> &pairs() const { return pairs_; }
  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  // Pair positions, ordered by the other lemma.
  std::span<const size_t> BySource(std::string_view source) const;
  std::span<const size_t> ByTarget(std::string_view target) const;

  // Translations of a source word / back-translations of an English word.
  std::vector<std::string> TranslationsOf(std::string_view source) const;
  std::vector<std::string> BackTranslationsOf(std::string_view target) const;

  const std::map<std::string, std::vector<size_t>, std::less<>> &by_source()
      const {
    return by_source_;
  }
  const std::map<std::string, std::vector<size_t>, std::less<>> &by_target()
      const {
    return by_target_;
  }

  const TranslationPair *Find(std::string_view source,
                              std::string_view target) const;

 private:
  std::vector<TranslationPair> pairs_;  // sorted by (source, target)
  std::map<std::string, std::vector<size_t>, std::less<>> by_source_;
  std::map<std::string, std::vector<size_t>, std::less<>> by_target_;
};

// Parses a bilingual TSV: `first <TAB> second [<TAB> field_id]`. For kEsEn the
// first column is the source word; for kEnEs it is the English word and the
// pair is flipped. A field id on a kEsEn line is an error.
BilingualLexicon ParseBilingual(std::string_view text, Origin origin);
BilingualLexicon LoadBilingual(const std::string &path, Origin origin);

// Homogeneous bilingual: union of both directions on (source, target).
BilingualLexicon MergeBilinguals(const BilingualLexicon &ab,
                                 const BilingualLexicon &ba);

// `source <TAB> target <TAB> field <TAB> origin`, one pair per line.
std::string SerializeBilingual(const BilingualLexicon &lex);
BilingualLexicon ParseSerializedBilingual(std::string_view text);

}  // namespace lexiweave

#endif  // LEXIWEAVE_BILINGUAL_H_
