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

#ifndef LEXIWEAVE_MONOLINGUAL_H_
#define LEXIWEAVE_MONOLINGUAL_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexiweave {

// One sense of a monolingual dictionary headword.
struct MonolingualEntry {
  std::string headword;
  int sense_no = 1;
  std::vector<std::string> definition;  // normalized tokens, non-empty
  std::optional<std::string> genus;     // a token of definition when present
};

class MonolingualDictionary {
 public:
  MonolingualDictionary() = default;
  explicit MonolingualDictionary(std::vector<MonolingualEntry> entries);

  const std::vector<MonolingualEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  const std::set<std::string> &headwords() const { return headwords_; }

  std::vector<const MonolingualEntry *> EntriesFor(
      std::string_view headword) const;

 private:
  std::vector<MonolingualEntry> entries_;
  std::set<std::string> headwords_;
};

// JSON Lines with keys headword, sense_no, definition (string or token
// array), and optional genus. Throws DataError with the line number on
// malformed records, empty definitions, or a genus absent from the
// definition tokens.
MonolingualDictionary ParseMonolingual(std::string_view text);
MonolingualDictionary LoadMonolingual(const std::string &path);

}  // namespace lexiweave

#endif  // LEXIWEAVE_MONOLINGUAL_H_
