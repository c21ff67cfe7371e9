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

#include "lexiweave/cooccurrence.h"

#include <cmath>
#include <map>
#include <set>

#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"
#include "lexiweave/links.h"

namespace lexiweave {

std::optional<double> AssociationRatio(size_t count_ab, size_t count_a,
                                       size_t count_b, size_t n_defs) {
  if (count_ab == 0 || count_a == 0 || count_b == 0 || n_defs == 0) {
    return std::nullopt;
  }
  const double n = static_cast<double>(n_defs);
  const double joint = static_cast<double>(count_ab) / n;
  const double pa = static_cast<double>(count_a) / n;
  const double pb = static_cast<double>(count_b) / n;
  return std::log2(joint / (pa * pb));
}

std::optional<double> AssociationRatio(const CoocPair &pair) {
  return AssociationRatio(pair.count_ab, pair.count_a, pair.count_b,
                          pair.n_defs);
}

std::vector<CoocPair> ExtractCooccurrences(const MonolingualDictionary &mono) {
  const auto &headwords = mono.headwords();
  std::map<std::string, size_t> single;
  std::map<std::pair<std::string, std::string>, size_t> joint;
  for (const MonolingualEntry &e : mono.entries()) {
    std::set<std::string> present;
    for (const std::string &tok : e.definition) {
      if (headwords.count(tok)) present.insert(tok);
    }
    for (const std::string &w : present) ++single[w];
    for (auto a = present.begin(); a != present.end(); ++a) {
      for (auto b = std::next(a); b != present.end(); ++b) ++joint[{*a, *b}];
    }
  }
  std::vector<CoocPair> out;
  for (const auto &[key, count] : joint) {
    CoocPair p;
    p.word_a = key.first;
    p.word_b = key.second;
    p.count_ab = count;
    p.count_a = single[key.first];
    p.count_b = single[key.second];
    p.n_defs = mono.size();
    p.ar = AssociationRatio(p);
    out.push_back(std::move(p));
  }
  return out;
}

std::string SerializeCooccurrences(const std::vector<CoocPair> &pairs) {
  std::string out;
  for (const CoocPair &p : pairs) {
    out += p.word_a + '\t' + p.word_b + '\t' + std::to_string(p.count_ab) +
           '\t' + std::to_string(p.count_a) + '\t' + std::to_string(p.count_b) +
           '\t' + std::to_string(p.n_defs) + '\t' +
           (p.ar ? FormatScore(*p.ar) : "-") + '\n';
  }
  return out;
}

std::vector<CoocPair> ParseCooccurrences(std::string_view text) {
  std::vector<CoocPair> out;
  size_t line_no = 0;
  for (const std::string &line : SplitFields(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    auto cols = SplitFields(line, '\t');
    if (cols.size() != 7) {
      throw DataError("line " + std::to_string(line_no) + ": expected 7 columns");
    }
    CoocPair p;
    p.word_a = cols[0];
    p.word_b = cols[1];
    try {
      p.count_ab = std::stoul(cols[2]);
      p.count_a = std::stoul(cols[3]);
      p.count_b = std::stoul(cols[4]);
      p.n_defs = std::stoul(cols[5]);
    } catch (const std::exception &) {
      throw DataError("line " + std::to_string(line_no) + ": bad count");
    }
    p.ar = ParseScore(cols[6]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace lexiweave
