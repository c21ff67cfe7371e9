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

#include "lexiweave/links.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

const std::vector<std::string> &MethodTags() {
  static const std::vector<std::string> kTags = {
      "mono1", "mono2", "mono3", "mono4",
      "poly1", "poly2", "poly3", "poly4",
      "variant", "field",
      "intersection", "parent", "brother", "distant",
      "cd1", "cd2", "cd3"};
  return kTags;
}

bool IsMethodTag(std::string_view tag) {
  const auto &tags = MethodTags();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::string CellTag(std::string_view a, std::string_view b) {
  if (a == b) throw std::invalid_argument("a cell needs two different methods");
  if (b < a) std::swap(a, b);
  return std::string(a) + "+" + std::string(b);
}

bool IsCellTag(std::string_view tag) {
  size_t plus = tag.find('+');
  if (plus == std::string_view::npos) return false;
  std::string_view a = tag.substr(0, plus);
  std::string_view b = tag.substr(plus + 1);
  return a < b && IsMethodTag(a) && IsMethodTag(b);
}

std::string FormatScore(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::optional<double> ParseScore(std::string_view text) {
  if (text.empty() || text == "-") return std::nullopt;
  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw DataError("bad score '" + std::string(text) + "'");
  }
  return value;
}

LinkSet::LinkSet(std::string method) : method_(std::move(method)) {
  if (!IsMethodTag(method_) && !IsCellTag(method_)) {
    throw std::invalid_argument("unregistered method tag '" + method_ + "'");
  }
}

void LinkSet::Add(LinkCandidate link) {
  link.method = method_;
  auto [it, inserted] = links_.try_emplace(link.key(), link);
  if (inserted) return;
  LinkCandidate &kept = it->second;
  kept.evidence.insert(link.evidence.begin(), link.evidence.end());
  if (link.score && (!kept.score || *link.score > *kept.score)) {
    kept.score = link.score;
  }
}

void LinkSet::Add(std::string source_word, std::string synset,
                  std::set<std::string> evidence, std::optional<double> score) {
  LinkCandidate link;
  link.source_word = std::move(source_word);
  link.synset = std::move(synset);
  link.evidence = std::move(evidence);
  link.score = score;
  Add(std::move(link));
}

const LinkCandidate *LinkSet::Find(const LinkKey &key) const {
  auto it = links_.find(key);
  return it == links_.end() ? nullptr : &it->second;
}

std::vector<LinkCandidate> LinkSet::links() const {
  std::vector<LinkCandidate> out;
  out.reserve(links_.size());
  for (const auto &[key, link] : links_) out.push_back(link);
  return out;
}

std::set<LinkKey> LinkSet::keys() const {
  std::set<LinkKey> out;
  for (const auto &[key, link] : links_) out.insert(key);
  return out;
}

size_t LinkSet::distinct_synsets() const {
  std::set<std::string> s;
  for (const auto &[key, link] : links_) s.insert(key.second);
  return s.size();
}

size_t LinkSet::distinct_words() const {
  std::set<std::string> s;
  for (const auto &[key, link] : links_) s.insert(key.first);
  return s.size();
}

std::string SerializeLinkSet(const LinkSet &set) {
  std::string out;
  for (const auto &[key, link] : set.by_key()) {
    out += link.source_word + '\t' + link.synset + '\t' + link.method + '\t';
    out += link.score ? FormatScore(*link.score) : "-";
    out += '\t';
    out += JoinFields({link.evidence.begin(), link.evidence.end()}, ",");
    out += '\n';
  }
  return out;
}

LinkSet ParseLinkSet(std::string_view text, const std::string &method) {
  LinkSet set(method);
  size_t line_no = 0;
  for (const std::string &line : SplitFields(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cols = SplitFields(line, '\t');
    if (cols.size() != 5) {
      throw DataError("line " + std::to_string(line_no) + ": expected 5 columns");
    }
    if (cols[2] != method) {
      throw DataError("line " + std::to_string(line_no) + ": method '" +
                      cols[2] + "' in a '" + method + "' link set");
    }
    std::vector<std::string> ev = SplitFields(cols[4], ',');
    set.Add(cols[0], cols[1], {ev.begin(), ev.end()}, ParseScore(cols[3]));
  }
  return set;
}

LinkSet LoadLinkSet(const std::string &path, const std::string &method) {
  return ParseLinkSet(ReadFile(path), method);
}

}  // namespace lexiweave
