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

#include <map>
#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "fixtures.h"
#include "lexiweave/cd_methods.h"
#include "lexiweave/class_methods.h"
#include "lexiweave/combiner.h"
#include "lexiweave/diagnostics.h"

namespace lexiweave {
namespace {

std::map<std::string, LinkSet> FixtureLinkSets() {
  Taxonomy tax = testing::LoadT14();
  BilingualLexicon h = testing::LoadHb14Core();
  std::map<std::string, LinkSet> sets;
  for (LinkSet &s : RunClassMethods(h, tax)) sets.emplace(s.method(), std::move(s));
  sets.emplace("cd3", RunCd3(h, tax));
  return sets;
}

std::set<LinkKey> KeysOf(const Wordnet &wn) {
  std::set<LinkKey> out;
  for (const auto &[key, link] : wn.links) out.insert(key);
  return out;
}

TEST_CASE("Method CS proportions") {
  DiagnosticCounts c;
  c.Add(Diagnostic::kOk, 92);
  c.Add(Diagnostic::kKo, 2);
  c.Add(Diagnostic::kHypo, 2);
  c.Add(Diagnostic::kNear, 2);
  MethodCS cs = ComputeMethodCS("mono1", c);
  CHECK(cs.sample_size == 98);
  CHECK(cs.ok() == doctest::Approx(0.939).epsilon(1e-3));
  CHECK(cs.confidence(CsMeasure::kOkPlusNear) == doctest::Approx(94.0 / 98.0));
  double sum = 0;
  for (double r : cs.ratios) sum += r;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

  DiagnosticCounts all_ok;
  all_ok.Add(Diagnostic::kOk, 5);
  CHECK(ComputeMethodCS("x", all_ok).ok() == 1.0);
  CHECK(ComputeMethodCS("x", all_ok).ratio(Diagnostic::kKo) == 0.0);
  CHECK_THROWS_AS(ComputeMethodCS("x", DiagnosticCounts()), std::invalid_argument);
}

TEST_CASE("Base wordnet on the fixture") {
  auto sets = FixtureLinkSets();
  Wordnet base = BuildBaseWordnet(sets, DefaultBaseMethods(), {{"mono1", 0.92}});
  CHECK(base.version == "v0.0");
  CHECK(KeysOf(base) == std::set<LinkKey>{{"banco", "610"},
                                          {"declive", "800"},
                                          {"felino", "310"},
                                          {"gato", "300"},
                                          {"minino", "300"},
                                          {"perro", "400"},
                                          {"ribazo", "800"},
                                          {"vaca", "210"}});
  CHECK(base.links.at({"felino", "310"}).provenance ==
        std::set<std::string>{"mono2", "variant"});
  CHECK(base.links.at({"vaca", "210"}).cs == 0.92);
  CHECK_FALSE(base.links.at({"gato", "300"}).cs.has_value());

  WordnetStats stats = ComputeWordnetStats(base);
  CHECK(stats.links == 8);
  CHECK(stats.synsets == 6);
  CHECK(stats.words == 8);
  CHECK(stats.poly_links == 0);

  CHECK(BuildBaseWordnet(sets, {}, {}).links.empty());
  CHECK_THROWS_AS(BuildBaseWordnet(sets, {"cd1"}, {}), std::invalid_argument);
}

TEST_CASE("Per-link CS is the best contributor") {
  std::map<std::string, LinkSet> sets;
  sets.emplace("mono2", LinkSet("mono2"));
  sets.emplace("variant", LinkSet("variant"));
  sets.at("mono2").Add("felino", "310");
  sets.at("variant").Add("felino", "310");
  Wordnet wn = BuildBaseWordnet(sets, {"mono2", "variant"},
                                {{"mono2", 0.9}, {"variant", 0.85}});
  CHECK(wn.links.at({"felino", "310"}).cs == 0.9);
}

TEST_CASE("Intersections") {
  auto sets = FixtureLinkSets();
  IntersectionCell cell = IntersectLinksets(sets.at("poly2"), sets.at("cd3"));
  CHECK(cell.tag() == "cd3+poly2");
  CHECK(cell.links.keys() ==
        std::set<LinkKey>{{"banco", "700"}, {"perro", "400"}});
  IntersectionCell swapped = IntersectLinksets(sets.at("cd3"), sets.at("poly2"));
  CHECK(swapped.links.keys() == cell.links.keys());
  CHECK(IntersectLinksets(sets.at("mono1"), sets.at("poly1")).links.empty());
  CHECK_THROWS_AS(IntersectLinksets(sets.at("cd3"), sets.at("cd3")),
                  std::invalid_argument);

  auto all = IntersectAll(sets, {"poly1", "poly2", "cd3"});
  CHECK(all.size() == 3);
  for (const IntersectionCell &c : all) {
    CHECK(c.links.size() <=
          std::min(sets.at(c.method_a).size(), sets.at(c.method_b).size()));
    for (const LinkKey &k : c.links.keys()) {
      CHECK(sets.at(c.method_a).Contains(k));
      CHECK(sets.at(c.method_b).Contains(k));
    }
  }
}

TEST_CASE("Cell selection and assembly") {
  auto sets = FixtureLinkSets();
  std::vector<IntersectionCell> cells = {
      IntersectLinksets(sets.at("cd3"), sets.at("poly2"))};
  auto accepted = SelectAcceptedCells(cells, {{"cd3+poly2", 0.95}}, 0.85);
  CHECK(cells[0].accepted);
  CHECK(cells[0].cs == 0.95);
  REQUIRE(accepted.size() == 2);

  std::vector<IntersectionCell> rejected = {
      IntersectLinksets(sets.at("cd3"), sets.at("poly2"))};
  CHECK(SelectAcceptedCells(rejected, {{"cd3+poly2", 0.70}}, 0.85).empty());
  CHECK_FALSE(rejected[0].accepted);
  CHECK(SelectAcceptedCells(rejected, {{"cd3+poly2", 0.99}}, 1.0).empty());
  CHECK(SelectAcceptedCells(rejected, {{"cd3+poly2", 0.85}}, 0.85).size() == 2);
  CHECK_THROWS_AS(SelectAcceptedCells(rejected, {}, 1.5), std::invalid_argument);

  Wordnet base = BuildBaseWordnet(sets, DefaultBaseMethods(), {});
  Assembly v01 = AssembleWordnet(base, accepted);
  CHECK(v01.wordnet.version == "v0.1");
  CHECK(v01.wordnet.links.size() == 9);
  CHECK(v01.new_links == 1);
  CHECK(v01.increase == doctest::Approx(0.125));
  CHECK(v01.wordnet.links.count({"banco", "700"}));
  CHECK(v01.wordnet.links.at({"perro", "400"}).provenance.count("cd3+poly2"));

  Assembly same = AssembleWordnet(base, {});
  CHECK(same.new_links == 0);
  CHECK(same.increase == 0.0);
  CHECK(KeysOf(same.wordnet) == KeysOf(base));

  // Re-adding links already present changes nothing.
  std::vector<WordnetLink> subset;
  for (const auto &[key, link] : base.links) subset.push_back(link);
  CHECK(AssembleWordnet(base, subset).new_links == 0);
}

TEST_CASE("Wordnet stats") {
  Wordnet wn;
  wn.Add({"a", "1", 0.5, {"mono1"}});
  WordnetStats one = ComputeWordnetStats(wn);
  CHECK(one.poly_links == 0);
  CHECK(one.cs == 0.5);
  wn.Add({"a", "2", 1.0, {"mono2"}});
  wn.Add({"b", "2", std::nullopt, {"mono2"}});
  WordnetStats three = ComputeWordnetStats(wn);
  CHECK(three.links == 3);
  CHECK(three.poly_links == 2);
  CHECK(three.cs == 0.75);
}

TEST_CASE("Wordnet serialization round-trips stats") {
  auto sets = FixtureLinkSets();
  Wordnet base = BuildBaseWordnet(sets, DefaultBaseMethods(), {{"mono2", 0.9}});
  std::string text = SerializeWordnet(base);
  Wordnet back = ParseWordnet(text, "v0.0");
  CHECK(SerializeWordnet(back) == text);
  CHECK(ComputeWordnetStats(back) == ComputeWordnetStats(base));
}

TEST_CASE("Raising the threshold never adds links") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<std::string, LinkSet> sets;
    std::vector<std::string> methods = {"poly1", "poly2", "poly3", "cd1", "cd2"};
    for (const std::string &m : methods) {
      LinkSet s(m);
      for (int i = 0; i < 30; ++i) {
        s.Add("w" + std::to_string(rng() % 10), std::to_string(rng() % 8));
      }
      sets.emplace(m, std::move(s));
    }
    auto cells = IntersectAll(sets, methods);
    std::map<std::string, double> cs;
    for (const auto &c : cells) cs[c.tag()] = u(rng);
    size_t prev = SIZE_MAX;
    for (int step = 0; step <= 10; ++step) {
      auto copy = cells;
      size_t n = SelectAcceptedCells(copy, cs, 0.5 + 0.05 * step).size();
      CHECK(n <= prev);
      prev = n;
    }
  }
}

}  // namespace
}  // namespace lexiweave
