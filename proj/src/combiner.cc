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

#include "lexiweave/combiner.h"

#include <algorithm>
#include <stdexcept>

#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"

namespace lexiweave {

namespace {

std::optional<double> MaxCs(std::optional<double> a, std::optional<double> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

const std::vector<std::string> &DefaultBaseMethods() {
  static const std::vector<std::string> kBase = {"mono1", "mono2",   "mono3",
                                                 "mono4", "variant", "field"};
  return kBase;
}

void Wordnet::Add(const WordnetLink &link) {
  auto [it, inserted] = links.try_emplace({link.source_word, link.synset}, link);
  if (inserted) return;
  it->second.provenance.insert(link.provenance.begin(), link.provenance.end());
  it->second.cs = MaxCs(it->second.cs, link.cs);
}

WordnetStats ComputeWordnetStats(const Wordnet &wn) {
  WordnetStats s;
  std::map<std::string, size_t> per_word;
  std::set<std::string> synsets;
  double cs_sum = 0;
  size_t cs_n = 0;
  for (const auto &[key, link] : wn.links) {
    ++per_word[key.first];
    synsets.insert(key.second);
    if (link.cs) {
      cs_sum += *link.cs;
      ++cs_n;
    }
  }
  s.links = wn.links.size();
  s.synsets = synsets.size();
  s.words = per_word.size();
  for (const auto &[word, n] : per_word) {
    if (n > 1) s.poly_links += n;
  }
  if (cs_n > 0) s.cs = cs_sum / static_cast<double>(cs_n);
  return s;
}

Wordnet BuildBaseWordnet(const std::map<std::string, LinkSet> &linksets,
                         const std::vector<std::string> &accepted_methods,
                         const std::map<std::string, double> &method_cs) {
  Wordnet wn;
  wn.version = "v0.0";
  for (const std::string &method : accepted_methods) {
    auto it = linksets.find(method);
    if (it == linksets.end()) {
      throw std::invalid_argument("unknown method tag '" + method + "'");
    }
    std::optional<double> cs;
    if (auto c = method_cs.find(method); c != method_cs.end()) cs = c->second;
    for (const auto &[key, link] : it->second.by_key()) {
      wn.Add({key.first, key.second, cs, {method}});
    }
  }
  return wn;
}

IntersectionCell IntersectLinksets(const LinkSet &a, const LinkSet &b) {
  if (a.method() == b.method()) {
    throw std::invalid_argument("cannot intersect '" + a.method() +
                                "' with itself");
  }
  const LinkSet &lo = a.method() < b.method() ? a : b;
  const LinkSet &hi = a.method() < b.method() ? b : a;
  IntersectionCell cell{lo.method(), hi.method(),
                        LinkSet(CellTag(lo.method(), hi.method())), std::nullopt,
                        false};
  for (const auto &[key, link] : lo.by_key()) {
    const LinkCandidate *other = hi.Find(key);
    if (!other) continue;
    std::set<std::string> evidence = link.evidence;
    evidence.insert(other->evidence.begin(), other->evidence.end());
    cell.links.Add(key.first, key.second, std::move(evidence));
  }
  return cell;
}

std::vector<IntersectionCell> IntersectAll(
    const std::map<std::string, LinkSet> &linksets,
    const std::vector<std::string> &methods) {
  std::vector<IntersectionCell> cells;
  for (size_t i = 0; i < methods.size(); ++i) {
    for (size_t j = i + 1; j < methods.size(); ++j) {
      auto a = linksets.find(methods[i]);
      auto b = linksets.find(methods[j]);
      if (a == linksets.end() || b == linksets.end()) {
        throw std::invalid_argument("unknown method tag in cell " +
                                    CellTag(methods[i], methods[j]));
      }
      cells.push_back(IntersectLinksets(a->second, b->second));
    }
  }
  return cells;
}

std::vector<WordnetLink> SelectAcceptedCells(
    std::vector<IntersectionCell> &cells,
    const std::map<std::string, double> &cell_cs, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0,1]");
  }
  Wordnet merged;
  for (IntersectionCell &cell : cells) {
    auto it = cell_cs.find(cell.tag());
    cell.cs = it == cell_cs.end() ? std::nullopt : std::optional(it->second);
    cell.accepted = cell.cs && *cell.cs >= threshold;
    if (!cell.accepted) continue;
    for (const auto &[key, link] : cell.links.by_key()) {
      merged.Add({key.first, key.second, cell.cs, {cell.tag()}});
    }
  }
  std::vector<WordnetLink> out;
  for (auto &[key, link] : merged.links) out.push_back(std::move(link));
  return out;
}

Assembly AssembleWordnet(const Wordnet &base,
                         const std::vector<WordnetLink> &accepted,
                         std::string version) {
  Assembly result;
  result.wordnet = base;
  result.wordnet.version = std::move(version);
  for (const WordnetLink &link : accepted) {
    if (!base.links.count({link.source_word, link.synset})) ++result.new_links;
    result.wordnet.Add(link);
  }
  if (!base.links.empty()) {
    result.increase = static_cast<double>(result.new_links) /
                      static_cast<double>(base.links.size());
  }
  return result;
}

std::string SerializeWordnet(const Wordnet &wn) {
  std::string out;
  for (const auto &[key, link] : wn.links) {
    out += key.first + '\t' + key.second + '\t' +
           (link.cs ? FormatScore(*link.cs) : "-") + '\t' +
           JoinFields({link.provenance.begin(), link.provenance.end()}, ";") +
           '\n';
  }
  return out;
}

Wordnet ParseWordnet(std::string_view text, std::string version) {
  Wordnet wn;
  wn.version = std::move(version);
  size_t line_no = 0;
  for (const std::string &line : SplitFields(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    auto cols = SplitFields(line, '\t');
    if (cols.size() != 4) {
      throw DataError("line " + std::to_string(line_no) + ": expected 4 columns");
    }
    auto prov = SplitFields(cols[3], ';');
    wn.Add({cols[0], cols[1], ParseScore(cols[2]), {prov.begin(), prov.end()}});
  }
  return wn;
}

nlohmann::json StatsToJson(const std::string &version, const WordnetStats &s) {
  nlohmann::json j = {{"version", version},
                      {"links", s.links},
                      {"synsets", s.synsets},
                      {"words", s.words},
                      {"poly_links", s.poly_links}};
  j["cs"] = s.cs ? nlohmann::json(*s.cs) : nlohmann::json(nullptr);
  return j;
}

}  // namespace lexiweave
