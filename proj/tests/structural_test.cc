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

#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "fixtures.h"
#include "lexiweave/errors.h"
#include "lexiweave/structural.h"
#include "oracles.h"

namespace lexiweave {
namespace {

using Ids = std::set<std::string>;

std::set<oracle::Record> AsOracle(const std::vector<StructuralRecord> &records) {
  std::set<oracle::Record> out;
  for (const StructuralRecord &r : records) {
    out.insert({r.source_word, r.ew_set, r.synsets});
  }
  return out;
}

const StructuralRecord *RecordFor(const std::vector<StructuralRecord> &records,
                                  std::string_view word) {
  for (const StructuralRecord &r : records) {
    if (r.source_word == word) return &r;
  }
  return nullptr;
}

TEST_CASE("Translation subsets") {
  BilingualLexicon h = testing::LoadHb14Full();
  CHECK(EnumerateTranslationSubsets(h, "banco") ==
        std::vector<std::vector<std::string>>{{"bank", "bench"}});
  CHECK(EnumerateTranslationSubsets(h, "vaca").empty());
  BilingualLexicon three = ParseBilingual("x\ta\nx\tb\nx\tc\n", Origin::kEsEn);
  auto subsets = EnumerateTranslationSubsets(three, "x");
  CHECK(subsets.size() == 4);
  CHECK(subsets.back() == std::vector<std::string>{"a", "b", "c"});

  std::string many;
  for (size_t i = 0; i <= kMaxSubsetTranslations; ++i) {
    many += "y\te" + std::to_string(i) + "\n";
  }
  CHECK_THROWS_AS(
      EnumerateTranslationSubsets(ParseBilingual(many, Origin::kEsEn), "y"),
      DataError);
}

TEST_CASE("Structural criteria on the fixture") {
  Taxonomy tax = testing::LoadT14();
  BilingualLexicon h = testing::LoadHb14Full();

  auto inter = ApplyStructuralCriterion(h, tax, StructuralCriterion::kIntersection);
  REQUIRE(RecordFor(inter, "sabueso"));
  CHECK(RecordFor(inter, "sabueso")->synsets == Ids{"450"});

  auto parent = ApplyStructuralCriterion(h, tax, StructuralCriterion::kParent);
  REQUIRE(RecordFor(parent, "chucho"));
  CHECK(RecordFor(parent, "chucho")->synsets == Ids{"400"});

  auto brother = ApplyStructuralCriterion(h, tax, StructuralCriterion::kBrother);
  REQUIRE(RecordFor(brother, "bicho"));
  CHECK(RecordFor(brother, "bicho")->synsets == Ids{"300", "400"});
  // dog and hound share 400 but have no second co-hyponym.
  CHECK(RecordFor(brother, "perro") == nullptr);

  auto distant = ApplyStructuralCriterion(h, tax, StructuralCriterion::kDistant);
  REQUIRE(RecordFor(distant, "canino"));
  CHECK(RecordFor(distant, "canino")->synsets == Ids{"500"});

  // Parent and distant are disjoint by hop count.
  CHECK(RecordFor(parent, "canino") == nullptr);
  CHECK(RecordFor(distant, "chucho") == nullptr);
}

TEST_CASE("Records convert to links") {
  Taxonomy tax = testing::LoadT14();
  auto brother = ApplyStructuralCriterion(testing::LoadHb14Full(), tax,
                                          StructuralCriterion::kBrother);
  LinkSet links = RecordsToLinkSet(brother, StructuralCriterion::kBrother);
  CHECK(links.method() == "brother");
  CHECK(links.Contains({"bicho", "300"}));
  CHECK(links.Contains({"bicho", "400"}));
}

TEST_CASE("Pruning") {
  StructuralRecord small{"w", {"a", "b"}, {"s1"}, StructuralCriterion::kParent};
  StructuralRecord big{"w", {"a", "b", "c"}, {"s1"}, StructuralCriterion::kParent};
  CHECK(PruneSubsumed({small, big}) == std::vector<StructuralRecord>{big});

  StructuralRecord other{"w", {"c", "d"}, {"s1"}, StructuralCriterion::kParent};
  CHECK(PruneSubsumed({small, other}).size() == 2);

  StructuralRecord more{"w", {"a", "b"}, {"s1", "s2"}, StructuralCriterion::kParent};
  CHECK(PruneSubsumed({more, big}).size() == 2);

  StructuralRecord cross{"w", {"a", "b", "c"}, {"s1"}, StructuralCriterion::kBrother};
  CHECK(PruneSubsumed({small, cross}).size() == 2);

  auto once = PruneSubsumed({small, big, other, more});
  CHECK(PruneSubsumed(once) == once);
}

TEST_CASE("Structural criteria match the brute-force oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::World w = oracle::RandomWorld(rng);
    Taxonomy tax = Taxonomy::Build(w.synsets);
    BilingualLexicon h(w.pairs);
    for (StructuralCriterion c : kAllStructuralCriteria) {
      auto records = ApplyStructuralCriterion(h, tax, c);
      auto expected = oracle::StructuralCriterion(w, c);
      CHECK_MESSAGE(AsOracle(records) == expected, "trial ", trial,
                    " criterion ", StructuralCriterionName(c));
      auto pruned = PruneSubsumed(records);
      CHECK(AsOracle(pruned) == oracle::Prune(expected));
      CHECK(PruneSubsumed(pruned) == pruned);
      for (const StructuralRecord &r : records) {
        CHECK(r.ew_set.size() >= 2);
        CHECK_FALSE(r.synsets.empty());
        if (c == StructuralCriterion::kIntersection) {
          for (const std::string &ew : r.ew_set) {
            for (const std::string &s : r.synsets) {
              auto syn = tax.SynsetsOf(ew);
              CHECK(std::find(syn.begin(), syn.end(), *tax.Find(s)) != syn.end());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("Stratification by subset size") {
  std::vector<StructuralRecord> records = {
      {"a", {"x", "y"}, {"1"}, StructuralCriterion::kIntersection},
      {"b", {"x", "y", "z"}, {"2"}, StructuralCriterion::kIntersection},
      {"c", {"x", "y"}, {"3"}, StructuralCriterion::kIntersection},
      {"c", {"x", "y", "z"}, {"3"}, StructuralCriterion::kIntersection},
  };
  auto verdict = [](std::string word, std::string synset, Diagnostic d) {
    Verdict v;
    v.source_word = std::move(word);
    v.synset = std::move(synset);
    v.method = "intersection";
    v.diagnostic = d;
    return v;
  };
  std::vector<Verdict> verdicts = {verdict("a", "1", Diagnostic::kOk),
                                   verdict("a", "1", Diagnostic::kKo),
                                   verdict("b", "2", Diagnostic::kOk),
                                   verdict("c", "3", Diagnostic::kHypo)};
  auto table = StratifyBySize(records, verdicts);
  REQUIRE(table.size() == 2);
  CHECK(table[2].judged == 2);
  CHECK(table[2].ok == 0.5);
  CHECK(table[2].ko == 0.5);
  CHECK(table[3].judged == 2);
  CHECK(table[3].ok == 0.5);
  CHECK(table[3].hypo == 0.5);
  CHECK(StratifyBySize(records, {}).empty());
  CHECK_THROWS_AS(StratifyBySize(records, {verdict("zz", "1", Diagnostic::kOk)}),
                  std::invalid_argument);
}

TEST_CASE("Stratification proportions") {
  std::vector<StructuralRecord> records;
  std::vector<Verdict> verdicts;
  for (int i = 0; i < 100; ++i) {
    std::string w2 = "two" + std::to_string(i), w3 = "three" + std::to_string(i);
    records.push_back({w2, {"a", "b"}, {"s"}, StructuralCriterion::kParent});
    records.push_back({w3, {"a", "b", "c"}, {"s"}, StructuralCriterion::kParent});
    Verdict v;
    v.method = "parent";
    v.synset = "s";
    v.source_word = w2;
    v.diagnostic = i < 81 ? Diagnostic::kOk : Diagnostic::kKo;
    verdicts.push_back(v);
    v.source_word = w3;
    v.diagnostic = i < 92 ? Diagnostic::kOk : Diagnostic::kKo;
    verdicts.push_back(v);
  }
  auto table = StratifyBySize(records, verdicts);
  CHECK(table[2].ok == doctest::Approx(0.81));
  CHECK(table[3].ok == doctest::Approx(0.92));
}

TEST_CASE("Records serialize") {
  Taxonomy tax = testing::LoadT14();
  auto records = ApplyStructuralCriterion(testing::LoadHb14Full(), tax,
                                          StructuralCriterion::kIntersection);
  CHECK(ParseRecords(SerializeRecords(records)) == records);
}

}  // namespace
}  // namespace lexiweave
