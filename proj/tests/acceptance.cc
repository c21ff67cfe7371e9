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

// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "lexiweave/class_methods.h"
#include "lexiweave/combiner.h"
#include "lexiweave/coverage.h"
#include "lexiweave/distance.h"
#include "lexiweave/pipeline.h"
#include "lexiweave/structural.h"
#include "lexiweave/validator.h"
#include "oracles.h"

namespace lexiweave {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  enum Kind { kPass, kFail, kSkip } kind = kPass;
  std::string detail;
};

Outcome Fail(std::string detail) { return {Outcome::kFail, std::move(detail)}; }
Outcome Pass(std::string detail) { return {Outcome::kPass, std::move(detail)}; }

class Harness {
 public:
  void Run(const std::string &name, double budget_s,
           const std::function<Outcome()> &check) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = check();
    } catch (const std::exception &e) {
      out = Fail(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (out.kind == Outcome::kPass && budget_s > 0 && elapsed > budget_s) {
      out = Fail("over time budget of " + std::to_string(budget_s) + " s");
    }
    const char *tag = out.kind == Outcome::kPass   ? "PASS"
                      : out.kind == Outcome::kFail ? "FAIL"
                                                   : "SKIP";
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << elapsed;
    std::cout << tag << "  " << name << "  (" << time.str() << " s)  "
              << out.detail << std::endl;
    if (out.kind == Outcome::kFail) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

oracle::World FixtureWorld(const Taxonomy &tax, const BilingualLexicon &h) {
  oracle::World w;
  for (SynsetIndex s = 0; s < tax.size(); ++s) w.synsets.push_back(tax.synset(s));
  w.pairs = h.pairs();
  return w;
}

Outcome ClassOracle() {
  Taxonomy t14 = testing::LoadT14();
  std::vector<oracle::World> worlds = {
      FixtureWorld(t14, testing::LoadHb14Core()),
      FixtureWorld(t14, testing::LoadHb14Full())};
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) worlds.push_back(oracle::RandomWorld(rng, 50, 100));
  size_t checks = 0;
  for (size_t i = 0; i < worlds.size(); ++i) {
    auto expected = oracle::ClassCriteria(worlds[i]);
    Taxonomy tax = Taxonomy::Build(worlds[i].synsets);
    for (const LinkSet &set : RunClassMethods(BilingualLexicon(worlds[i].pairs), tax)) {
      ++checks;
      if (set.keys() != expected.at(set.method())) {
        return Fail("world " + std::to_string(i) + " criterion " + set.method());
      }
    }
  }
  return Pass(std::to_string(worlds.size()) + " lexicons, " +
              std::to_string(checks) + " criterion outputs match");
}

Outcome StructuralOracle() {
  Taxonomy t14 = testing::LoadT14();
  std::vector<oracle::World> worlds = {
      FixtureWorld(t14, testing::LoadHb14Full())};
  std::mt19937_64 rng(202);
  for (int i = 0; i < 100; ++i) worlds.push_back(oracle::RandomWorld(rng, 50, 100));
  size_t records = 0;
  for (size_t i = 0; i < worlds.size(); ++i) {
    Taxonomy tax = Taxonomy::Build(worlds[i].synsets);
    BilingualLexicon h(worlds[i].pairs);
    for (StructuralCriterion c : kAllStructuralCriteria) {
      auto got = ApplyStructuralCriterion(h, tax, c);
      std::set<oracle::Record> as_oracle;
      for (const auto &r : got) as_oracle.insert({r.source_word, r.ew_set, r.synsets});
      auto expected = oracle::StructuralCriterion(worlds[i], c);
      std::string where = "world " + std::to_string(i) + " criterion " +
                          std::string(StructuralCriterionName(c));
      if (as_oracle != expected) return Fail(where);
      auto pruned = PruneSubsumed(got);
      std::set<oracle::Record> pruned_oracle;
      for (const auto &r : pruned) {
        pruned_oracle.insert({r.source_word, r.ew_set, r.synsets});
      }
      if (pruned_oracle != oracle::Prune(expected)) return Fail(where + " pruning");
      if (PruneSubsumed(pruned) != pruned) return Fail(where + " idempotence");
      records += got.size();
    }
  }
  return Pass(std::to_string(worlds.size()) + " lexicons, " +
              std::to_string(records) + " records; prune idempotent");
}

Outcome Distance() {
  Taxonomy tax = testing::LoadT14();
  auto ids = [&](std::initializer_list<const char *> list) {
    std::vector<SynsetIndex> out;
    for (const char *id : list) out.push_back(*tax.Find(id));
    return out;
  };
  std::vector<std::vector<SynsetIndex>> gato_perro = {ids({"300"}),
                                                      ids({"400", "450"})};
  std::vector<std::vector<SynsetIndex>> hound_dog = {ids({"400", "450"}),
                                                     ids({"400"})};
  if (std::abs(ConceptualDistance(tax, gato_perro).distance - 7.0 / 6.0) > 1e-12) {
    return Fail("dist(gato, perro) != 7/6");
  }
  if (std::abs(ConceptualDistance(tax, hound_dog).distance - 1.0 / 3.0) > 1e-12) {
    return Fail("dist(hound, dog) != 1/3");
  }

  std::vector<Synset> synsets;
  for (SynsetIndex s = 0; s < tax.size(); ++s) synsets.push_back(tax.synset(s));
  size_t pairs = 0;
  for (const auto &[w1, s1] : tax.lemma_index()) {
    for (const auto &[w2, s2] : tax.lemma_index()) {
      std::vector<std::vector<std::string>> words(2);
      for (SynsetIndex s : s1) words[0].push_back(tax.id(s));
      for (SynsetIndex s : s2) words[1].push_back(tax.id(s));
      double expected = oracle::EnumeratedTupleDistance(synsets, words);
      std::vector<std::vector<SynsetIndex>> q = {s1, s2};
      double got = ConceptualDistance(tax, q).distance;
      if (std::abs(got - expected) > 1e-9) return Fail("T14 pair " + w1 + "/" + w2);
      ++pairs;
    }
  }

  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 200; ++trial) {
    auto dag = oracle::RandomTaxonomy(rng, 2 + rng() % 11, 10);
    Taxonomy t = Taxonomy::Build(dag);
    std::vector<std::vector<SynsetIndex>> words(2);
    std::vector<std::vector<std::string>> names(2);
    for (int w = 0; w < 2; ++w) {
      std::set<SynsetIndex> pick;
      size_t n = 1 + rng() % 3;
      while (pick.size() < n && pick.size() < t.size()) pick.insert(rng() % t.size());
      for (SynsetIndex s : pick) {
        words[w].push_back(s);
        names[w].push_back(t.id(s));
      }
    }
    double expected = oracle::EnumeratedTupleDistance(dag, names);
    DistanceResult r = ConceptualDistance(t, words);
    bool ok = std::isinf(expected) ? !r.connected()
                                   : std::abs(r.distance - expected) <= 1e-9;
    if (!ok) return Fail("random DAG " + std::to_string(trial));
  }
  return Pass("7/6 and 1/3 within 1e-12; " + std::to_string(pairs) +
              " T14 word pairs and 200 random DAGs within 1e-9");
}

Outcome GoldenRun() {
  auto run = [](const std::string &name) {
    PipelineConfig c;
    c.taxonomy = testing::DataPath("t14.tsv");
    c.bilingual_es_en = testing::DataPath("hb14_es_en.tsv");
    c.bilingual_en_es = testing::DataPath("hb14_en_es.tsv");
    c.monolingual = testing::DataPath("m14.jsonl");
    c.out = (fs::temp_directory_path() / "lexiweave_acceptance" / name).string();
    c.cell_cs = {{"cd3+poly2", 0.95}};
    fs::remove_all(c.out);
    std::ostringstream log;
    for (Stage s : {Stage::kLoad, Stage::kClass, Stage::kStructural, Stage::kCd,
                    Stage::kSample, Stage::kCombine, Stage::kAssemble}) {
      RunStage(c, s, log);
    }
    return fs::path(c.out);
  };
  fs::path a = run("golden_a"), b = run("golden_b");

  const std::set<LinkKey> base = {{"vaca", "210"},  {"declive", "800"},
                                  {"felino", "310"}, {"banco", "610"},
                                  {"gato", "300"},   {"minino", "300"},
                                  {"perro", "400"},  {"ribazo", "800"}};
  auto keys = [](const fs::path &p, const char *version) {
    std::set<LinkKey> out;
    for (const auto &[k, l] : ParseWordnet(ReadFile(p.string()), version).links) {
      out.insert(k);
    }
    return out;
  };
  if (keys(a / "wordnet_v0.0.tsv", "v0.0") != base) return Fail("base wordnet differs");
  std::set<LinkKey> v01 = base;
  v01.insert({"banco", "700"});
  if (keys(a / "wordnet_v0.1.tsv", "v0.1") != v01) return Fail("v0.1 differs");

  size_t files = 0;
  for (const auto &e : fs::recursive_directory_iterator(a)) {
    if (!e.is_regular_file()) continue;
    fs::path rel = fs::relative(e.path(), a);
    if (!fs::exists(b / rel) || ReadFile(e.path().string()) != ReadFile((b / rel).string())) {
      return Fail("artifact " + rel.string() + " differs between runs");
    }
    ++files;
  }
  return Pass("v0.0 = 8 links, v0.1 = 9 links incl. banco->700; " +
              std::to_string(files) + " artifacts byte-identical across two runs");
}

// Cell CS percentages from the combination table; absent entries are cells
// with no links.
const std::map<std::pair<std::string, std::string>, int> &TableCells() {
  static const std::map<std::pair<std::string, std::string>, int> cells = {
      {{"brother", "cd1"}, 70},     {{"brother", "cd2"}, 71},
      {{"brother", "cd3"}, 79},     {{"brother", "distant"}, 58},
      {{"brother", "parent"}, 6},   {{"brother", "poly1"}, 86},
      {{"brother", "poly2"}, 89},   {{"brother", "poly4"}, 67},
      {{"cd1", "cd2"}, 79},         {{"cd1", "cd3"}, 85},
      {{"cd1", "distant"}, 68},     {{"cd1", "parent"}, 71},
      {{"cd1", "poly1"}, 86},       {{"cd1", "poly2"}, 86},
      {{"cd1", "poly3"}, 72},       {{"cd1", "poly4"}, 64},
      {{"cd2", "cd3"}, 86},         {{"cd2", "distant"}, 71},
      {{"cd2", "parent"}, 72},      {{"cd2", "poly1"}, 88},
      {{"cd2", "poly2"}, 86},       {{"cd2", "poly3"}, 75},
      {{"cd2", "poly4"}, 67},       {{"cd3", "distant"}, 79},
      {{"cd3", "parent"}, 80},      {{"cd3", "poly1"}, 95},
      {{"cd3", "poly2"}, 95},       {{"cd3", "poly3"}, 100},
      {{"cd3", "poly4"}, 77},       {{"distant", "parent"}, 67},
      {{"distant", "poly1"}, 78},   {{"distant", "poly2"}, 7},
      {{"distant", "poly4"}, 65},   {{"parent", "poly1"}, 77},
      {{"parent", "poly2"}, 70},    {{"parent", "poly4"}, 67},
      {{"poly1", "poly3"}, 100},    {{"poly1", "poly4"}, 88},
      {{"poly2", "poly3"}, 77},     {{"poly2", "poly4"}, 96},
  };
  return cells;
}

Outcome CombinationArithmetic() {
  const std::vector<std::string> methods = {"brother", "cd1",   "cd2",   "cd3",
                                            "distant", "parent", "poly1", "poly2",
                                            "poly3",   "poly4"};
  // Each cell gets its own 100 shared links, so every intersection is exactly
  // that block.
  std::map<std::string, LinkSet> sets;
  for (const std::string &m : methods) sets.emplace(m, LinkSet(m));
  for (const auto &[cell, pct] : TableCells()) {
    for (int i = 0; i < 100; ++i) {
      std::string word = cell.first + "_" + cell.second + "_" + std::to_string(i);
      sets.at(cell.first).Add(word, "1");
      sets.at(cell.second).Add(word, "1");
    }
  }
  std::vector<IntersectionCell> cells = IntersectAll(sets, methods);

  // Verdict fixtures: one fully judged sample per cell with pct% ok.
  VerdictStore store;
  std::map<std::string, double> cell_cs;
  for (const IntersectionCell &cell : cells) {
    if (cell.links.empty()) continue;
    Sample s = DrawSample(cell.links, 1.0, 1, cell.tag());
    int pct = TableCells().at({cell.method_a, cell.method_b});
    for (int i = 0; i < 100; ++i) {
      store.Record(s, s.links[i].source_word, s.links[i].synset,
                   i < pct ? "ok" : "ko", "fixture");
    }
    cell_cs[cell.tag()] = ComputeDiagnosticRatios(s, store.ForSample(s.id)).cs.ok();
  }

  DiagnosticCounts mono1;
  mono1.Add(Diagnostic::kOk, 92);
  mono1.Add(Diagnostic::kKo, 2);
  mono1.Add(Diagnostic::kHypo, 2);
  mono1.Add(Diagnostic::kNear, 2);
  if (std::abs(ComputeMethodCS("mono1", mono1).ok() - 92.0 / 98.0) > 1e-12) {
    return Fail("method CS proportions");
  }

  SelectAcceptedCells(cells, cell_cs, 0.85);
  std::set<std::string> accepted;
  for (const IntersectionCell &c : cells) {
    if (c.accepted) accepted.insert(c.tag());
  }
  const std::set<std::string> bold = {
      "brother+poly1", "brother+poly2", "cd1+cd3",   "cd1+poly1", "cd1+poly2",
      "cd2+cd3",       "cd2+poly1",     "cd2+poly2", "cd3+poly1", "cd3+poly2",
      "cd3+poly3",     "poly1+poly3",   "poly1+poly4", "poly2+poly4"};
  if (accepted != bold) {
    std::string got;
    for (const std::string &t : accepted) got += t + " ";
    return Fail("accepted: " + got);
  }
  return Pass(std::to_string(cells.size()) + " cells, " +
              std::to_string(cell_cs.size()) + " measured, exactly the 14 "
              "expected cells accepted at 0.85");
}

Outcome ThresholdMonotonicity() {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> u(0, 1);
  const std::vector<std::string> methods = {"poly1", "poly2", "poly3", "poly4",
                                            "cd1",   "cd2",   "cd3"};
  for (int trial = 0; trial < 200; ++trial) {
    std::map<std::string, LinkSet> sets;
    for (const std::string &m : methods) {
      LinkSet s(m);
      for (int i = 0; i < 40; ++i) {
        s.Add("w" + std::to_string(rng() % 15), std::to_string(rng() % 10));
      }
      sets.emplace(m, std::move(s));
    }
    auto cells = IntersectAll(sets, methods);
    std::map<std::string, double> cs;
    for (const auto &c : cells) {
      if (rng() % 5) cs[c.tag()] = u(rng);
    }
    size_t prev = SIZE_MAX;
    for (int step = 0; step <= 10; ++step) {
      auto copy = cells;
      size_t n = SelectAcceptedCells(copy, cs, 0.5 + 0.05 * step).size();
      if (n > prev) return Fail("trial " + std::to_string(trial));
      prev = n;
    }
  }
  return Pass("200 random CS assignments, thresholds 0.50..1.00");
}

Outcome Sampling() {
  LinkSet links("poly3");
  for (int i = 0; i < 1000; ++i) {
    links.Add("w" + std::to_string(i), std::to_string(100000 + i * 7));
  }
  Sample first = DrawSample(links, 0.10, 1);
  if (first.links.size() != 100) return Fail("size " + std::to_string(first.links.size()));
  for (int run = 0; run < 4; ++run) {
    if (DrawSample(links, 0.10, 1).links != first.links) return Fail("not repeatable");
  }
  Sample other = DrawSample(links, 0.10, 2);
  std::set<LinkKey> a, b;
  for (const auto &l : first.links) a.insert(l.key());
  for (const auto &l : other.links) b.insert(l.key());
  if (a.size() != 100) return Fail("duplicates in sample");
  size_t overlap = 0;
  for (const LinkKey &k : a) overlap += b.count(k);
  if (a == b) return Fail("different seed gave the same sample");
  // Two independent 10% samples share 10 links on average; 25 is far in the
  // tail of that hypergeometric distribution.
  if (overlap > 25) return Fail("overlap " + std::to_string(overlap));
  return Pass("100 of 1000 links, identical over 5 runs; seed 2 overlaps " +
              std::to_string(overlap) + " links");
}

Outcome Wordnet15() {
  const char *dir = std::getenv("LEXIWEAVE_WN15_DIR");
  if (!dir || !*dir || !fs::exists(dir)) {
    return {Outcome::kSkip, "LEXIWEAVE_WN15_DIR not set; WordNet 1.5 data absent"};
  }
  Taxonomy tax = LoadTaxonomy(dir, TaxonomyFormat::kWndb);
  CoverageReport cov = ComputeCoverage(BilingualLexicon(), tax);
  if (tax.size() != 60557 || cov.english_nouns != 87642) {
    return Fail(std::to_string(tax.size()) + " synsets, " +
                std::to_string(cov.english_nouns) + " English nouns");
  }
  return Pass("60557 synsets, 87642 English nouns");
}

}  // namespace
}  // namespace lexiweave

int main() {
  using namespace lexiweave;
  Harness h;
  h.Run("class criteria match brute-force oracle", 5, ClassOracle);
  h.Run("structural criteria match oracle, pruning idempotent", 10, StructuralOracle);
  h.Run("conceptual distance matches path enumeration", 10, Distance);
  h.Run("fixture pipeline golden run", 0, GoldenRun);
  h.Run("combination arithmetic selects the 14 expected cells", 0,
        CombinationArithmetic);
  h.Run("threshold monotonicity", 0, ThresholdMonotonicity);
  h.Run("sampling determinism", 0, Sampling);
  h.Run("WordNet 1.5 size and coverage (conditional)", 0, Wordnet15);
  std::cout << (h.failures() == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(h.failures()))
            << std::endl;
  return h.failures() == 0 ? 0 : 1;
}
