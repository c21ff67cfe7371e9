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

#include "lexiweave/monolingual.h"

#include <algorithm>

#include "json.hpp"
#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

namespace {

using json = nlohmann::json;

std::string LineError(size_t line_no, const std::string &what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

MonolingualDictionary::MonolingualDictionary(
    std::vector<MonolingualEntry> entries)
    : entries_(std::move(entries)) {
  for (const MonolingualEntry &e : entries_) headwords_.insert(e.headword);
}

std::vector<const MonolingualEntry *> MonolingualDictionary::EntriesFor(
    std::string_view headword) const {
  std::vector<const MonolingualEntry *> out;
  for (const MonolingualEntry &e : entries_) {
    if (e.headword == headword) out.push_back(&e);
  }
  return out;
}

MonolingualDictionary ParseMonolingual(std::string_view text) {
  std::vector<MonolingualEntry> entries;
  size_t line_no = 0;
  for (const std::string &line : SplitFields(text, '\n')) {
    ++line_no;
    if (NormalizeLemma(line).empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error &e) {
      throw DataError(LineError(line_no, std::string("bad JSON: ") + e.what()));
    }
    if (!record.is_object() || !record.contains("headword") ||
        !record["headword"].is_string() || !record.contains("definition")) {
      throw DataError(LineError(line_no, "record needs headword and definition"));
    }
    MonolingualEntry entry;
    entry.headword = NormalizeLemma(record["headword"].get<std::string>());
    if (entry.headword.empty()) {
      throw DataError(LineError(line_no, "empty headword"));
    }
    if (record.contains("sense_no")) {
      if (!record["sense_no"].is_number_integer() ||
          record["sense_no"].get<int>() < 1) {
        throw DataError(LineError(line_no, "sense_no must be a positive integer"));
      }
      entry.sense_no = record["sense_no"].get<int>();
    }
    const json &def = record["definition"];
    if (def.is_string()) {
      entry.definition = TokenizeDefinition(def.get<std::string>());
    } else if (def.is_array()) {
      for (const json &tok : def) {
        if (!tok.is_string()) {
          throw DataError(LineError(line_no, "definition tokens must be strings"));
        }
        for (std::string &t : TokenizeDefinition(tok.get<std::string>())) {
          entry.definition.push_back(std::move(t));
        }
      }
    } else {
      throw DataError(LineError(line_no, "definition must be a string or array"));
    }
    if (entry.definition.empty()) {
      throw DataError(LineError(line_no, "empty definition"));
    }
    if (record.contains("genus") && !record["genus"].is_null()) {
      if (!record["genus"].is_string()) {
        throw DataError(LineError(line_no, "genus must be a string"));
      }
      std::string genus = NormalizeLemma(record["genus"].get<std::string>());
      if (std::find(entry.definition.begin(), entry.definition.end(), genus) ==
          entry.definition.end()) {
        throw DataError(
            LineError(line_no, "genus '" + genus + "' is not a definition token"));
      }
      entry.genus = std::move(genus);
    }
    entries.push_back(std::move(entry));
  }
  return MonolingualDictionary(std::move(entries));
}

MonolingualDictionary LoadMonolingual(const std::string &path) {
  return ParseMonolingual(ReadFile(path));
}

}  // namespace lexiweave
