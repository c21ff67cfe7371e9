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
#include "lexiweave/class_methods.h"
#include "oracles.h"

namespace lexiweave {
namespace {

using Keys = std::set<LinkKey>;

Keys KeysOf(const LinkSet &set) { return set.keys(); }

PairShape Shape(const BilingualLexicon &h, const Taxonomy &tax,
                std::string_view sw, std::string_view ew) {
  const TranslationPair *p = h.Find(sw, ew);
  REQUIRE(p != nullptr);
  auto shape = ClassifyPair(h, tax, *p);
  REQUIRE(shape.has_value());
  return *shape;
}

TEST_CASE("Pair shapes on the fixture") {
  Taxonomy tax = testing::LoadT14();
  BilingualLexicon h = testing::LoadHb14Core();

  PairShape vaca = Shape(h, tax, "vaca", "cow");
  CHECK(vaca.shape == 1);
  CHECK(vaca.word_class == WordClass::kMono);

  PairShape hound = Shape(h, tax, "perro", "hound");
  CHECK(hound.sw_fanout == 2);
  CHECK(hound.ew_fanout == 1);
  CHECK(hound.shape == 2);
  CHECK(hound.word_class == WordClass::kPoly);

  PairShape gato = Shape(h, tax, "gato", "cat");
  CHECK(gato.shape == 3);
  CHECK(gato.word_class == WordClass::kMono);
  // With the structural words bicho also back-translates cat.
  BilingualLexicon full = testing::LoadHb14Full();
  CHECK(Shape(full, tax, "gato", "cat").ew_fanout == 3);

  const TranslationPair *ribazo = h.Find("ribazo", "bank");
  CHECK_FALSE(ClassifyPair(h, tax, *ribazo).has_value());
}

TEST_CASE("Class criteria on the fixture") {
  Taxonomy tax = testing::LoadT14();
  BilingualLexicon h = testing::LoadHb14Core();
  auto run = [&](WordClass c, int shape) {
    return KeysOf(ApplyClassCriterion(h, tax, c, shape));
  };
  CHECK(run(WordClass::kMono, 1) == Keys{{"declive", "800"}, {"vaca", "210"}});
  CHECK(run(WordClass::kMono, 2) ==
        Keys{{"banco", "610"}, {"felino", "310"}, {"perro", "400"}});
  CHECK(run(WordClass::kMono, 3) == Keys{{"gato", "300"}, {"minino", "300"}});
  CHECK(run(WordClass::kMono, 4).empty());
  CHECK(run(WordClass::kPoly, 1) ==
        Keys{{"formación", "900"}, {"formación", "910"}});
  CHECK(run(WordClass::kPoly, 2) == Keys{{"banco", "700"},
                                         {"banco", "800"},
                                         {"perro", "400"},
                                         {"perro", "450"}});
  CHECK(run(WordClass::kPoly, 3).empty());
  CHECK(run(WordClass::kPoly, 4).empty());
}

TEST_CASE("Variant criterion") {
  Taxonomy tax = testing::LoadT14();
  // dog and hound translate only to perro, so 400 qualifies alongside 310.
  CHECK(KeysOf(ApplyVariant(testing::LoadHb14Core(), tax)) ==
        Keys{{"felino", "310"}, {"perro", "400"}});
  // A single-variant synset never qualifies.
  CHECK(KeysOf(ApplyVariant(ParseBilingual("gato\tcat\n", Origin::kEsEn), tax))
            .empty());
  // Two variants with different source words.
  CHECK(KeysOf(ApplyVariant(ParseBilingual("felino\tfeline\nfélido\tfelid\n",
                                           Origin::kEsEn),
                            tax))
            .empty());
}

TEST_CASE("Field criterion") {
  Taxonomy tax = testing::LoadT14();
  LinkSet field = ApplyField(testing::LoadHb14Core(), tax);
  CHECK(KeysOf(field) == Keys{{"ribazo", "800"}});
  CHECK(field.Find({"ribazo", "800"})->evidence ==
        std::set<std::string>{"bank", "slope"});
  CHECK(KeysOf(ApplyField(ParseBilingual("bank\tribazo\tmusic\n", Origin::kEnEs),
                          tax))
            .empty());
  CHECK(KeysOf(ApplyField(ParseBilingual("banco\tbank\n", Origin::kEsEn), tax))
            .empty());
}

TEST_CASE("Cells partition classifiable pairs and mono stays monosemous") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    oracle::World w = oracle::RandomWorld(rng);
    Taxonomy tax = Taxonomy::Build(w.synsets);
    BilingualLexicon h(w.pairs);
    size_t classifiable = 0;
    for (const TranslationPair &p : h.pairs()) {
      if (ClassifyPair(h, tax, p)) ++classifiable;
    }
    size_t cell_pairs = 0;
    for (WordClass c : {WordClass::kMono, WordClass::kPoly}) {
      for (int shape = 1; shape <= 4; ++shape) {
        for (const TranslationPair &p : h.pairs()) {
          auto s = ClassifyPair(h, tax, p);
          if (s && s->shape == shape && s->word_class == c) ++cell_pairs;
        }
        if (c == WordClass::kMono) {
          for (const LinkCandidate &l :
               ApplyClassCriterion(h, tax, c, shape).links()) {
            for (const std::string &ew : l.evidence) {
              CHECK(tax.SynsetsOf(ew).size() == 1);
            }
          }
        }
      }
    }
    CHECK(cell_pairs == classifiable);
  }
}

TEST_CASE("Class criteria match the brute-force oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::World w = oracle::RandomWorld(rng);
    auto expected = oracle::ClassCriteria(w);
    Taxonomy tax = Taxonomy::Build(w.synsets);
    for (const LinkSet &set : RunClassMethods(BilingualLexicon(w.pairs), tax)) {
      CHECK_MESSAGE(KeysOf(set) == expected.at(set.method()),
                    "trial ", trial, " criterion ", set.method());
    }
  }
}

TEST_CASE("Class criteria ignore input order") {
  std::mt19937_64 rng(23);
  oracle::World w = oracle::RandomWorld(rng);
  Taxonomy tax = Taxonomy::Build(w.synsets);
  auto forward = RunClassMethods(BilingualLexicon(w.pairs), tax);
  std::shuffle(w.pairs.begin(), w.pairs.end(), rng);
  auto shuffled = RunClassMethods(BilingualLexicon(w.pairs), tax);
  for (size_t i = 0; i < forward.size(); ++i) {
    CHECK(forward[i].links() == shuffled[i].links());
  }
}

}  // namespace
}  // namespace lexiweave
