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

#include "lexiweave/taxonomy.h"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"

namespace lexiweave {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string LineError(size_t line_no, const std::string &what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> ComputeDepths(
    const std::vector<std::vector<SynsetIndex>> &hypernyms,
    const std::vector<std::string> &ids) {
  const size_t n = hypernyms.size();
  std::vector<std::vector<SynsetIndex>> children(n);
  std::vector<size_t> pending(n);
  std::deque<SynsetIndex> ready;
  for (size_t i = 0; i < n; ++i) {
    pending[i] = hypernyms[i].size();
    for (SynsetIndex h : hypernyms[i]) {
      if (h == i) throw DataError("cycle at " + ids[i]);
      children[h].push_back(static_cast<SynsetIndex>(i));
    }
    if (pending[i] == 0) ready.push_back(static_cast<SynsetIndex>(i));
  }

  // Kahn order: a node is settled once every hypernym is settled.
  std::vector<int> depth(n, std::numeric_limits<int>::max());
  size_t settled = 0;
  while (!ready.empty()) {
    SynsetIndex s = ready.front();
    ready.pop_front();
    ++settled;
    if (hypernyms[s].empty()) depth[s] = 1;
    for (SynsetIndex c : children[s]) {
      depth[c] = std::min(depth[c], depth[s] + 1);
      if (--pending[c] == 0) ready.push_back(c);
    }
  }
  if (settled == n) return depth;

  // Every unsettled node keeps an unsettled hypernym, so walking upwards
  // through unsettled nodes must revisit a node on a cycle.
  SynsetIndex start = 0;
  for (size_t i = 0; i < n; ++i) {
    if (pending[i] > 0 && (pending[start] == 0 || ids[i] < ids[start])) {
      start = static_cast<SynsetIndex>(i);
    }
  }
  std::vector<bool> seen(n, false);
  SynsetIndex cur = start;
  while (!seen[cur]) {
    seen[cur] = true;
    for (SynsetIndex h : hypernyms[cur]) {
      if (pending[h] > 0) {
        cur = h;
        break;
      }
    }
  }
  throw DataError("cycle at " + ids[cur]);
}

Taxonomy Taxonomy::Build(std::vector<Synset> synsets) {
  if (synsets.empty()) throw DataError("no synsets");
  Taxonomy tax;
  tax.synsets_ = std::move(synsets);
  const size_t n = tax.synsets_.size();
  std::vector<std::string> ids;
  ids.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Synset &s = tax.synsets_[i];
    if (s.id.empty()) throw DataError("empty synset id");
    if (s.variants.empty()) throw DataError("synset " + s.id + " has no variants");
    if (!tax.by_id_.emplace(s.id, static_cast<SynsetIndex>(i)).second) {
      throw DataError("duplicate synset id " + s.id);
    }
    ids.push_back(s.id);
  }

  auto by_id_order = [&ids](SynsetIndex a, SynsetIndex b) {
    return ids[a] < ids[b];
  };
  tax.hypernyms_.resize(n);
  tax.hyponyms_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    std::set<SynsetIndex> parents;
    for (const std::string &h : tax.synsets_[i].hypernyms) {
      auto it = tax.by_id_.find(h);
      if (it == tax.by_id_.end()) {
        throw DataError("dangling hypernym " + h + " in synset " + ids[i]);
      }
      if (it->second == i) throw DataError("cycle at " + ids[i]);
      parents.insert(it->second);
    }
    tax.hypernyms_[i].assign(parents.begin(), parents.end());
    std::sort(tax.hypernyms_[i].begin(), tax.hypernyms_[i].end(), by_id_order);
    for (SynsetIndex p : tax.hypernyms_[i]) {
      tax.hyponyms_[p].push_back(static_cast<SynsetIndex>(i));
    }
  }
  for (auto &kids : tax.hyponyms_) {
    std::sort(kids.begin(), kids.end(), by_id_order);
  }

  tax.depth_ = ComputeDepths(tax.hypernyms_, ids);

  for (size_t i = 0; i < n; ++i) {
    if (tax.hypernyms_[i].empty()) {
      tax.roots_.push_back(static_cast<SynsetIndex>(i));
    }
    for (const std::string &v : tax.synsets_[i].variants) {
      auto &list = tax.lemma_index_[v];
      if (list.empty() || list.back() != i) {
        list.push_back(static_cast<SynsetIndex>(i));
      }
    }
  }
  std::sort(tax.roots_.begin(), tax.roots_.end(), by_id_order);
  for (auto &[lemma, list] : tax.lemma_index_) {
    std::sort(list.begin(), list.end(), by_id_order);
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return tax;
}

std::optional<SynsetIndex> Taxonomy::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::span<const SynsetIndex> Taxonomy::SynsetsOf(std::string_view lemma) const {
  auto it = lemma_index_.find(lemma);
  if (it == lemma_index_.end()) return {};
  return it->second;
}

bool Taxonomy::Contains(std::string_view lemma) const {
  return lemma_index_.find(lemma) != lemma_index_.end();
}

size_t Taxonomy::connection_count() const {
  size_t total = 0;
  for (const auto &[lemma, list] : lemma_index_) total += list.size();
  return total;
}

std::optional<int> Taxonomy::UpwardDistance(SynsetIndex from,
                                            SynsetIndex ancestor) const {
  if (from == ancestor) return 0;
  std::vector<int> dist(synsets_.size(), -1);
  std::deque<SynsetIndex> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    SynsetIndex s = queue.front();
    queue.pop_front();
    for (SynsetIndex h : hypernyms_[s]) {
      if (dist[h] >= 0) continue;
      dist[h] = dist[s] + 1;
      if (h == ancestor) return dist[h];
      queue.push_back(h);
    }
  }
  return std::nullopt;
}

bool Taxonomy::IsStrictAncestor(SynsetIndex ancestor, SynsetIndex of) const {
  auto d = UpwardDistance(of, ancestor);
  return d.has_value() && *d > 0;
}

std::vector<SynsetIndex> Taxonomy::HypernymChain(SynsetIndex i) const {
  std::vector<SynsetIndex> chain{i};
  while (!hypernyms_[chain.back()].empty()) {
    chain.push_back(hypernyms_[chain.back()].front());
  }
  return chain;
}

Taxonomy ParseTaxonomyTsv(std::string_view text) {
  std::vector<Synset> synsets;
  size_t line_no = 0;
  for (const std::string &raw : SplitFields(text, '\n')) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = SplitFields(line, '\t');
    if (cols.size() < 2 || cols.size() > 3) {
      throw DataError(LineError(line_no, "expected 2 or 3 tab-separated columns"));
    }
    Synset s;
    s.id = std::string(Trim(cols[0]));
    if (s.id.empty()) throw DataError(LineError(line_no, "empty synset id"));
    for (const std::string &v : SplitFields(cols[1], '|')) {
      std::string lemma = NormalizeLemma(v);
      if (lemma.empty()) continue;
      if (std::find(s.variants.begin(), s.variants.end(), lemma) ==
          s.variants.end()) {
        s.variants.push_back(std::move(lemma));
      }
    }
    if (s.variants.empty()) {
      throw DataError(LineError(line_no, "synset " + s.id + " has no variants"));
    }
    if (cols.size() == 3) {
      for (const std::string &h : SplitFields(cols[2], ',')) {
        std::string_view id = Trim(h);
        if (!id.empty()) s.hypernyms.emplace_back(id);
      }
    }
    synsets.push_back(std::move(s));
  }
  return Taxonomy::Build(std::move(synsets));
}

Taxonomy ParseWndbData(std::string_view text) {
  std::vector<Synset> synsets;
  size_t line_no = 0;
  for (const std::string &line : SplitFields(text, '\n')) {
    ++line_no;
    // License preamble lines start with two spaces.
    if (line.empty() || line.front() == ' ') continue;
    std::string body = line.substr(0, line.find('|'));
    std::istringstream in(body);
    Synset s;
    std::string lex_filenum, ss_type, w_cnt_hex;
    if (!(in >> s.id >> lex_filenum >> ss_type >> w_cnt_hex)) {
      throw DataError(LineError(line_no, "truncated synset header"));
    }
    size_t w_cnt = 0;
    try {
      w_cnt = std::stoul(w_cnt_hex, nullptr, 16);
    } catch (const std::exception &) {
      throw DataError(LineError(line_no, "bad word count " + w_cnt_hex));
    }
    for (size_t k = 0; k < w_cnt; ++k) {
      std::string word, lex_id;
      if (!(in >> word >> lex_id)) {
        throw DataError(LineError(line_no, "truncated word list"));
      }
      if (auto paren = word.find('('); paren != std::string::npos) {
        word.resize(paren);
      }
      std::string lemma = NormalizeLemma(word);
      if (!lemma.empty() && std::find(s.variants.begin(), s.variants.end(),
                                      lemma) == s.variants.end()) {
        s.variants.push_back(std::move(lemma));
      }
    }
    size_t p_cnt = 0;
    if (!(in >> p_cnt)) {
      throw DataError(LineError(line_no, "missing pointer count"));
    }
    for (size_t k = 0; k < p_cnt; ++k) {
      std::string symbol, offset, pos, source_target;
      if (!(in >> symbol >> offset >> pos >> source_target)) {
        throw DataError(LineError(line_no, "truncated pointer list"));
      }
      if (symbol == "@" && pos == "n") s.hypernyms.push_back(offset);
    }
    synsets.push_back(std::move(s));
  }
  return Taxonomy::Build(std::move(synsets));
}

Taxonomy LoadTaxonomy(const std::string &path, TaxonomyFormat format) {
  if (format == TaxonomyFormat::kTsv) return ParseTaxonomyTsv(ReadFile(path));
  std::filesystem::path p(path);
  if (std::filesystem::is_directory(p)) p /= "data.noun";
  return ParseWndbData(ReadFile(p.string()));
}

TaxonomyFormat ParseTaxonomyFormat(std::string_view name) {
  if (name == "tsv") return TaxonomyFormat::kTsv;
  if (name == "wndb") return TaxonomyFormat::kWndb;
  throw UsageError("unknown taxonomy format: " + std::string(name));
}

}  // namespace lexiweave
