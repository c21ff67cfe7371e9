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

#include "lexiweave/bilingual.h"

#include <algorithm>
#include <tuple>

#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

namespace {

std::string LineError(size_t line_no, const std::string &what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

std::string_view OriginName(Origin origin) {
  switch (origin) {
    case Origin::kEsEn: return "es_en";
    case Origin::kEnEs: return "en_es";
    case Origin::kMerged: return "merged";
  }
  return "merged";
}

Origin ParseOrigin(std::string_view name) {
  if (name == "es_en") return Origin::kEsEn;
  if (name == "en_es") return Origin::kEnEs;
  if (name == "merged") return Origin::kMerged;
  throw UsageError("unknown bilingual direction: " + std::string(name));
}

BilingualLexicon::BilingualLexicon(std::vector<TranslationPair> pairs) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const TranslationPair &a, const TranslationPair &b) {
                     return std::tie(a.source_lemma, a.target_lemma) <
                            std::tie(b.source_lemma, b.target_lemma);
                   });
  for (TranslationPair &p : pairs) {
    if (!pairs_.empty() && pairs_.back().source_lemma == p.source_lemma &&
        pairs_.back().target_lemma == p.target_lemma) {
      TranslationPair &kept = pairs_.back();
      if (!kept.field_id && p.field_id) kept.field_id = p.field_id;
      if (kept.origin != p.origin) kept.origin = Origin::kMerged;
      continue;
    }
    pairs_.push_back(std::move(p));
  }
  for (size_t i = 0; i < pairs_.size(); ++i) {
    by_source_[pairs_[i].source_lemma].push_back(i);
    by_target_[pairs_[i].target_lemma].push_back(i);
  }
  // by_target_ lists are ordered by source lemma already since pairs_ is
  // sorted source-first.
}

std::span<const size_t> BilingualLexicon::BySource(
    std::string_view source) const {
  auto it = by_source_.find(source);
  if (it == by_source_.end()) return {};
  return it->second;
}

std::span<const size_t> BilingualLexicon::ByTarget(
    std::string_view target) const {
  auto it = by_target_.find(target);
  if (it == by_target_.end()) return {};
  return it->second;
}

std::vector<std::string> BilingualLexicon::TranslationsOf(
    std::string_view source) const {
  std::vector<std::string> out;
  for (size_t i : BySource(source)) out.push_back(pairs_[i].target_lemma);
  return out;
}

std::vector<std::string> BilingualLexicon::BackTranslationsOf(
    std::string_view target) const {
  std::vector<std::string> out;
  for (size_t i : ByTarget(target)) out.push_back(pairs_[i].source_lemma);
  return out;
}

const TranslationPair *BilingualLexicon::Find(std::string_view source,
                                              std::string_view target) const {
  for (size_t i : BySource(source)) {
    if (pairs_[i].target_lemma == target) return &pairs_[i];
  }
  return nullptr;
}

BilingualLexicon ParseBilingual(std::string_view text, Origin origin) {
  if (origin == Origin::kMerged) {
    throw UsageError("bilingual files are read as es_en or en_es");
  }
  std::vector<TranslationPair> pairs;
  size_t line_no = 0;
  for (std::string line : SplitFields(text, '\n')) {
    ++line_no;
    line = StripCr(std::move(line));
    if (NormalizeLemma(line).empty() || line.front() == '#') continue;
    std::vector<std::string> cols = SplitFields(line, '\t');
    if (cols.size() < 2 || cols.size() > 3) {
      throw DataError(LineError(line_no, "expected 2 or 3 tab-separated columns"));
    }
    std::string first = NormalizeLemma(cols[0]);
    std::string second = NormalizeLemma(cols[1]);
    if (first.empty() || second.empty()) {
      throw DataError(LineError(line_no, "empty lemma"));
    }
    TranslationPair pair;
    pair.origin = origin;
    if (cols.size() == 3) {
      std::string field = NormalizeLemma(cols[2]);
      if (!field.empty()) {
        if (origin == Origin::kEsEn) {
          throw DataError(
              LineError(line_no, "field identifier on an es_en entry"));
        }
        pair.field_id = std::move(field);
      }
    }
    if (origin == Origin::kEsEn) {
      pair.source_lemma = std::move(first);
      pair.target_lemma = std::move(second);
    } else {
      pair.source_lemma = std::move(second);
      pair.target_lemma = std::move(first);
    }
    pairs.push_back(std::move(pair));
  }
  return BilingualLexicon(std::move(pairs));
}

BilingualLexicon LoadBilingual(const std::string &path, Origin origin) {
  return ParseBilingual(ReadFile(path), origin);
}

BilingualLexicon MergeBilinguals(const BilingualLexicon &ab,
                                 const BilingualLexicon &ba) {
  std::vector<TranslationPair> all = ab.pairs();
  all.insert(all.end(), ba.pairs().begin(), ba.pairs().end());
  return BilingualLexicon(std::move(all));
}

std::string SerializeBilingual(const BilingualLexicon &lex) {
  std::string out;
  for (const TranslationPair &p : lex.pairs()) {
    out += p.source_lemma;
    out += '\t';
    out += p.target_lemma;
    out += '\t';
    out += p.field_id.value_or("");
    out += '\t';
    out += OriginName(p.origin);
    out += '\n';
  }
  return out;
}

BilingualLexicon ParseSerializedBilingual(std::string_view text) {
  std::vector<TranslationPair> pairs;
  size_t line_no = 0;
  for (std::string line : SplitFields(text, '\n')) {
    ++line_no;
    line = StripCr(std::move(line));
    if (line.empty()) continue;
    std::vector<std::string> cols = SplitFields(line, '\t');
    if (cols.size() != 4) {
      throw DataError(LineError(line_no, "expected 4 columns"));
    }
    TranslationPair p;
    p.source_lemma = cols[0];
    p.target_lemma = cols[1];
    if (!cols[2].empty()) p.field_id = cols[2];
    p.origin = ParseOrigin(cols[3]);
    pairs.push_back(std::move(p));
  }
  return BilingualLexicon(std::move(pairs));
}

}  // namespace lexiweave
