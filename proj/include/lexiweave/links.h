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

#ifndef LEXIWEAVE_LINKS_H_
#define LEXIWEAVE_LINKS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexiweave {

// Registered method tags, in reporting order.
const std::vector<std::string> &MethodTags();
bool IsMethodTag(std::string_view tag);

// Intersection cells are tagged "a+b" with a < b.
std::string CellTag(std::string_view a, std::string_view b);
bool IsCellTag(std::string_view tag);

// Shortest decimal form that parses back to the same double.
std::string FormatScore(double value);
std::optional<double> ParseScore(std::string_view text);

// Identity of a link: (source word, synset id).
using LinkKey = std::pair<std::string, std::string>;

// Attachment of a source-language word to a synset by one method.
struct LinkCandidate {
  std::string source_word;
  std::string synset;
  std::string method;
  std::optional<double> score;
  std::set<std::string> evidence;  // English lemmas behind the link

  LinkKey key() const { return {source_word, synset}; }
  bool operator==(const LinkCandidate &) const = default;
};

// Links of one method, unique on (source word, synset).
class LinkSet {
 public:
  LinkSet() = default;
  // Throws std::invalid_argument for an unregistered tag.
  explicit LinkSet(std::string method);

  const std::string &method() const { return method_; }

  // Merges duplicates: evidence is united and the higher score kept.
  void Add(LinkCandidate link);
  void Add(std::string source_word, std::string synset,
           std::set<std::string> evidence = {},
           std::optional<double> score = std::nullopt);

  bool Contains(const LinkKey &key) const { return links_.count(key) > 0; }
  const LinkCandidate *Find(const LinkKey &key) const;
  size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }

  // Links in (source word, synset) order.
  std::vector<LinkCandidate> links() const;
  std::set<LinkKey> keys() const;
  size_t distinct_synsets() const;
  size_t distinct_words() const;

  const std::map<LinkKey, LinkCandidate> &by_key() const { return links_; }

 private:
  std::string method_;
  std::map<LinkKey, LinkCandidate> links_;
};

// `source_word <TAB> synset_id <TAB> method <TAB> score <TAB> evidence`;
// an unset score is written as "-", evidence is comma-separated.
std::string SerializeLinkSet(const LinkSet &set);
// Every line must carry `method`.
LinkSet ParseLinkSet(std::string_view text, const std::string &method);
LinkSet LoadLinkSet(const std::string &path, const std::string &method);

}  // namespace lexiweave

#endif  // LEXIWEAVE_LINKS_H_
