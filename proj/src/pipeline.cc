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

#include "lexiweave/pipeline.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "httplib.h"
#include "lexiweave/bilingual.h"
#include "lexiweave/cd_methods.h"
#include "lexiweave/class_methods.h"
#include "lexiweave/combiner.h"
#include "lexiweave/cooccurrence.h"
#include "lexiweave/coverage.h"
#include "lexiweave/errors.h"
#include "lexiweave/links.h"
#include "lexiweave/monolingual.h"
#include "lexiweave/structural.h"
#include "lexiweave/validation_api.h"
#include "lexiweave/validator.h"

namespace lexiweave {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr const char *kManifest = "manifest.json";

struct LexicalData {
  Taxonomy tax;
  BilingualLexicon hbil;
  MonolingualDictionary mono;
};

std::string TaxonomyInputPath(const PipelineConfig &c) {
  if (c.taxonomy_format == TaxonomyFormat::kWndb && fs::is_directory(c.taxonomy)) {
    return (fs::path(c.taxonomy) / "data.noun").string();
  }
  return c.taxonomy;
}

std::vector<std::string> SourcePaths(const PipelineConfig &c) {
  std::vector<std::string> paths = {TaxonomyInputPath(c), c.bilingual_es_en,
                                    c.bilingual_en_es};
  if (!c.monolingual.empty()) paths.push_back(c.monolingual);
  return paths;
}

LexicalData LoadSources(const PipelineConfig &c) {
  for (const std::string &p : SourcePaths(c)) {
    if (!fs::exists(p)) throw DataError("missing input file " + p);
  }
  auto with_context = [](const std::string &path, auto &&fn) {
    try {
      return fn();
    } catch (const DataError &e) {
      throw DataError(path + ": " + e.what());
    }
  };
  Taxonomy tax = with_context(c.taxonomy, [&] {
    return LoadTaxonomy(c.taxonomy, c.taxonomy_format);
  });
  BilingualLexicon es_en = with_context(c.bilingual_es_en, [&] {
    return LoadBilingual(c.bilingual_es_en, Origin::kEsEn);
  });
  BilingualLexicon en_es = with_context(c.bilingual_en_es, [&] {
    return LoadBilingual(c.bilingual_en_es, Origin::kEnEs);
  });
  MonolingualDictionary mono;
  if (!c.monolingual.empty()) {
    mono = with_context(c.monolingual,
                        [&] { return LoadMonolingual(c.monolingual); });
  }
  return {std::move(tax), MergeBilinguals(es_en, en_es), std::move(mono)};
}

// Per-stage record of input digests, output digests and config snapshot.
class Manifest {
 public:
  explicit Manifest(fs::path out) : out_(std::move(out)) {
    fs::path p = out_ / kManifest;
    if (fs::exists(p)) {
      doc_ = json::parse(ReadFile(p.string()), nullptr, false);
      if (doc_.is_discarded()) throw DataError("corrupt manifest " + p.string());
    }
    if (!doc_.is_object()) doc_ = json::object();
    if (!doc_.contains("stages")) doc_["stages"] = json::object();
  }

  // Fails unless `stage` ran and neither its inputs nor outputs changed since.
  void Require(Stage stage) const {
    const std::string name(StageName(stage));
    if (!doc_["stages"].contains(name)) {
      throw DataError("missing artifact: stage '" + name + "' has not been run in " +
                      out_.string());
    }
    const json &entry = doc_["stages"][name];
    for (const auto &[rel, digest] : entry["outputs"].items()) {
      fs::path p = out_ / rel;
      if (!fs::exists(p)) throw DataError("missing artifact " + p.string());
      if (FileDigest(p.string()) != digest.get<std::string>()) {
        throw DataError("stale artifact " + p.string() + ": rerun stage '" +
                        name + "'");
      }
    }
    for (const auto &[key, digest] : entry["inputs"].items()) {
      const std::string path = Resolve(key);
      if (FileDigest(path) != digest.get<std::string>()) {
        throw DataError("input " + path + " changed since stage '" + name +
                        "' ran; rerun it");
      }
    }
  }

  bool Has(Stage stage) const {
    return doc_["stages"].contains(std::string(StageName(stage)));
  }

  void Record(Stage stage, const std::vector<std::string> &inputs,
              const std::vector<std::string> &outputs, const json &config) {
    json entry = {{"config", config},
                  {"inputs", json::object()},
                  {"outputs", json::object()}};
    for (const std::string &p : inputs) entry["inputs"][Key(p)] = FileDigest(p);
    for (const std::string &rel : outputs) {
      entry["outputs"][rel] = FileDigest((out_ / rel).string());
    }
    doc_["stages"][std::string(StageName(stage))] = std::move(entry);
    std::ofstream f(out_ / kManifest, std::ios::binary | std::ios::trunc);
    f << doc_.dump(2) << '\n';
  }

 private:
  static constexpr std::string_view kOutPrefix = "$out/";

  // Inputs under the output directory are keyed relative to it so that
  // manifests do not depend on where the run was written.
  std::string Key(const std::string &path) const {
    fs::path rel = fs::path(path).lexically_relative(out_);
    if (!rel.empty() && *rel.begin() != "..") {
      return std::string(kOutPrefix) + rel.generic_string();
    }
    return path;
  }

  std::string Resolve(const std::string &key) const {
    if (key.rfind(kOutPrefix, 0) == 0) {
      return (out_ / key.substr(kOutPrefix.size())).string();
    }
    return key;
  }

  fs::path out_;
  json doc_;
};

class ArtifactWriter {
 public:
  explicit ArtifactWriter(fs::path out) : out_(std::move(out)) {}

  void Write(const std::string &rel, const std::string &content) {
    fs::path p = out_ / rel;
    fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot write " + p.string());
    f << content;
    written_.push_back(rel);
  }

  const std::vector<std::string> &written() const { return written_; }

 private:
  fs::path out_;
  std::vector<std::string> written_;
};

std::string LinkPath(const std::string &method) {
  return "links/" + method + ".tsv";
}

std::map<std::string, LinkSet> ReadLinkSets(const fs::path &out,
                                            std::vector<std::string> *inputs) {
  std::map<std::string, LinkSet> sets;
  for (const std::string &tag : MethodTags()) {
    fs::path p = out / LinkPath(tag);
    if (!fs::exists(p)) throw DataError("missing artifact " + p.string());
    sets.emplace(tag, LoadLinkSet(p.string(), tag));
    if (inputs) inputs->push_back(p.string());
  }
  return sets;
}

std::vector<std::string> DiscardedMethods(const PipelineConfig &c) {
  std::vector<std::string> out;
  for (const std::string &tag : MethodTags()) {
    if (std::find(c.base_methods.begin(), c.base_methods.end(), tag) ==
        c.base_methods.end()) {
      out.push_back(tag);
    }
  }
  return out;
}

// CS per sample id from recorded verdicts, then config overrides.
std::map<std::string, double> MeasuredCs(const VerdictStore &store,
                                         CsMeasure measure,
                                         const std::map<std::string, double> &overrides) {
  std::map<std::string, DiagnosticCounts> counts;
  for (const Verdict &v : store.All()) counts[v.sample_id].Add(v.diagnostic);
  std::map<std::string, double> cs;
  for (const auto &[id, c] : counts) {
    cs[id] = ComputeMethodCS(id, c).confidence(measure);
  }
  for (const auto &[id, value] : overrides) cs[id] = value;
  return cs;
}

std::string Percent(double fraction) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << fraction * 100.0;
  return s.str();
}

void StageLoad(const PipelineConfig &c, Manifest &manifest, std::ostream &log) {
  LexicalData data = LoadSources(c);
  ArtifactWriter w(c.out);
  w.Write("hbil.tsv", SerializeBilingual(data.hbil));
  CoverageReport cov = ComputeCoverage(data.hbil, data.tax);
  w.Write("coverage.json", CoverageToJson(cov).dump(2) + "\n");
  manifest.Record(Stage::kLoad, SourcePaths(c), w.written(), ConfigToJson(c));
  log << "load: " << data.tax.size() << " synsets, " << data.hbil.size()
      << " merged pairs, " << data.mono.size() << " definitions\n";
}

void StageClass(const PipelineConfig &c, Manifest &manifest, std::ostream &log) {
  manifest.Require(Stage::kLoad);
  LexicalData data = LoadSources(c);
  ArtifactWriter w(c.out);
  for (const LinkSet &set : RunClassMethods(data.hbil, data.tax)) {
    w.Write(LinkPath(set.method()), SerializeLinkSet(set));
    log << "class: " << set.method() << " " << set.size() << " links\n";
  }
  manifest.Record(Stage::kClass, SourcePaths(c), w.written(), ConfigToJson(c));
}

void StageStructural(const PipelineConfig &c, Manifest &manifest,
                     std::ostream &log) {
  manifest.Require(Stage::kLoad);
  LexicalData data = LoadSources(c);
  ArtifactWriter w(c.out);
  for (StructuralCriterion crit : kAllStructuralCriteria) {
    auto records =
        PruneSubsumed(ApplyStructuralCriterion(data.hbil, data.tax, crit));
    const std::string name(StructuralCriterionName(crit));
    w.Write("structural/" + name + ".tsv", SerializeRecords(records));
    LinkSet links = RecordsToLinkSet(records, crit);
    w.Write(LinkPath(name), SerializeLinkSet(links));
    log << "structural: " << name << " " << records.size() << " records, "
        << links.size() << " links\n";
  }
  manifest.Record(Stage::kStructural, SourcePaths(c), w.written(),
                  ConfigToJson(c));
}

void StageCd(const PipelineConfig &c, Manifest &manifest, std::ostream &log) {
  manifest.Require(Stage::kLoad);
  LexicalData data = LoadSources(c);
  ArtifactWriter w(c.out);
  std::vector<CoocPair> cooc = ExtractCooccurrences(data.mono);
  w.Write("cooccurrences.tsv", SerializeCooccurrences(cooc));
  for (const LinkSet &set : {RunCd1(cooc, data.hbil, data.tax),
                             RunCd2(data.mono, data.hbil, data.tax),
                             RunCd3(data.hbil, data.tax)}) {
    w.Write(LinkPath(set.method()), SerializeLinkSet(set));
    log << "cd: " << set.method() << " " << set.size() << " links\n";
  }
  manifest.Record(Stage::kCd, SourcePaths(c), w.written(), ConfigToJson(c));
}

void StageSample(const PipelineConfig &c, Manifest &manifest, std::ostream &log) {
  for (Stage s : {Stage::kClass, Stage::kStructural, Stage::kCd}) {
    manifest.Require(s);
  }
  std::vector<std::string> inputs;
  auto sets = ReadLinkSets(c.out, &inputs);
  json samples = json::array();
  for (const std::string &tag : MethodTags()) {
    if (sets.at(tag).empty()) continue;
    samples.push_back(SampleToJson(DrawSample(sets.at(tag), c.sample_fraction, c.seed)));
  }
  for (const IntersectionCell &cell : IntersectAll(sets, DiscardedMethods(c))) {
    if (cell.links.empty()) continue;
    samples.push_back(
        SampleToJson(DrawSample(cell.links, c.sample_fraction, c.seed)));
  }
  ArtifactWriter w(c.out);
  w.Write("samples.json", json{{"samples", samples}}.dump(2) + "\n");
  manifest.Record(Stage::kSample, inputs, w.written(), ConfigToJson(c));
  log << "sample: " << samples.size() << " samples\n";
}

void StageCombine(const PipelineConfig &c, Manifest &manifest,
                  std::ostream &log) {
  for (Stage s : {Stage::kClass, Stage::kStructural, Stage::kCd}) {
    manifest.Require(s);
  }
  std::vector<std::string> inputs;
  auto sets = ReadLinkSets(c.out, &inputs);
  inputs.push_back(c.verdicts_path());
  VerdictStore store(c.verdicts_path());
  std::vector<IntersectionCell> cells = IntersectAll(sets, DiscardedMethods(c));
  std::map<std::string, double> measured =
      MeasuredCs(store, c.cs_measure, c.cell_cs);
  std::map<std::string, double> cell_cs;
  for (const IntersectionCell &cell : cells) {
    if (auto it = measured.find(cell.tag()); it != measured.end()) {
      cell_cs[cell.tag()] = it->second;
    }
  }
  if (cell_cs.empty()) {
    throw DataError(
        "cell CS unavailable: record verdicts on cell samples or set cell_cs");
  }
  std::vector<WordnetLink> accepted = SelectAcceptedCells(cells, cell_cs, c.threshold);

  ArtifactWriter w(c.out);
  json report = json::array();
  for (const IntersectionCell &cell : cells) {
    json entry = {{"cell", cell.tag()},
                  {"size", cell.links.size()},
                  {"accepted", cell.accepted}};
    entry["cs"] = cell.cs ? json(*cell.cs) : json(nullptr);
    report.push_back(std::move(entry));
    if (!cell.links.empty()) {
      w.Write("cells/" + cell.tag() + ".tsv", SerializeLinkSet(cell.links));
    }
  }
  w.Write("cells.json", json{{"threshold", c.threshold},
                             {"cs_measure", std::string(CsMeasureName(c.cs_measure))},
                             {"cells", report}}
                            .dump(2) + "\n");
  Wordnet accepted_wn;
  for (const WordnetLink &l : accepted) accepted_wn.Add(l);
  w.Write("accepted.tsv", SerializeWordnet(accepted_wn));
  manifest.Record(Stage::kCombine, inputs, w.written(), ConfigToJson(c));
  size_t n_accepted = 0;
  for (const IntersectionCell &cell : cells) n_accepted += cell.accepted ? 1 : 0;
  log << "combine: " << cells.size() << " cells, " << cell_cs.size()
      << " with CS, " << n_accepted << " accepted, " << accepted.size()
      << " links\n";
}

void StageAssemble(const PipelineConfig &c, Manifest &manifest,
                   std::ostream &log) {
  manifest.Require(Stage::kCombine);
  std::vector<std::string> inputs;
  auto sets = ReadLinkSets(c.out, &inputs);
  fs::path accepted_path = fs::path(c.out) / "accepted.tsv";
  inputs.push_back(accepted_path.string());
  inputs.push_back(c.verdicts_path());
  VerdictStore store(c.verdicts_path());
  std::map<std::string, double> method_cs =
      MeasuredCs(store, c.cs_measure, c.method_cs);

  Wordnet base;
  try {
    base = BuildBaseWordnet(sets, c.base_methods, method_cs);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  Wordnet accepted = ParseWordnet(ReadFile(accepted_path.string()), "accepted");
  std::vector<WordnetLink> extra;
  for (const auto &[key, link] : accepted.links) extra.push_back(link);
  Assembly result = AssembleWordnet(base, extra);

  ArtifactWriter w(c.out);
  w.Write("wordnet_v0.0.tsv", SerializeWordnet(base));
  w.Write("wordnet_v0.1.tsv", SerializeWordnet(result.wordnet));
  json stats = {
      {"versions",
       {StatsToJson(base.version, ComputeWordnetStats(base)),
        StatsToJson(result.wordnet.version,
                    ComputeWordnetStats(result.wordnet))}},
      {"new_links", result.new_links},
      {"increase", result.increase}};
  w.Write("wordnet_stats.json", stats.dump(2) + "\n");
  manifest.Record(Stage::kAssemble, inputs, w.written(), ConfigToJson(c));
  log << "assemble: v0.0 " << base.links.size() << " links, v0.1 "
      << result.wordnet.links.size() << " links (+" << result.new_links << ", "
      << Percent(result.increase) << "%)\n";
}

void StageStats(const PipelineConfig &c, Manifest &manifest, std::ostream &log) {
  manifest.Require(Stage::kLoad);
  const fs::path out(c.out);
  json cov = json::parse(ReadFile((out / "coverage.json").string()));
  log << "Dictionary coverage\n";
  log << "  taxonomy: " << cov["wordnet"]["english_nouns"] << " English nouns, "
      << cov["wordnet"]["synsets"] << " synsets, "
      << cov["wordnet"]["connections"] << " connections\n";
  log << "  bilingual: " << cov["bilingual"]["english_nouns"]
      << " English nouns, " << cov["bilingual"]["source_nouns"]
      << " source nouns, " << cov["bilingual"]["connections"]
      << " connections\n";
  log << "  reachable: " << cov["reachable"]["english_nouns"]
      << " English nouns, " << cov["reachable"]["source_nouns"]
      << " source nouns, " << cov["reachable"]["synsets"] << " synsets, "
      << cov["reachable"]["connections"] << " connections\n";
  log << "  of taxonomy: "
      << Percent(cov["ratios"]["english_of_wordnet"].get<double>())
      << "% English nouns, "
      << Percent(cov["ratios"]["synsets_of_wordnet"].get<double>())
      << "% synsets; of bilingual: "
      << Percent(cov["ratios"]["english_of_bilingual"].get<double>())
      << "% English, "
      << Percent(cov["ratios"]["source_of_bilingual"].get<double>())
      << "% source\n";

  VerdictStore store(c.verdicts_path());
  std::map<std::string, DiagnosticCounts> counts;
  for (const Verdict &v : store.All()) counts[v.sample_id].Add(v.diagnostic);
  log << "Methods\n";
  log << "  method        links synsets  words    ok    ko  hypo hyper  near\n";
  for (const std::string &tag : MethodTags()) {
    fs::path p = out / LinkPath(tag);
    if (!fs::exists(p)) continue;
    LinkSet set = LoadLinkSet(p.string(), tag);
    log << "  " << std::left << std::setw(12) << tag << std::right
        << std::setw(7) << set.size() << std::setw(8) << set.distinct_synsets()
        << std::setw(7) << set.distinct_words();
    if (auto it = counts.find(tag); it != counts.end()) {
      MethodCS cs = ComputeMethodCS(tag, it->second);
      for (Diagnostic d : kAllDiagnostics) {
        log << std::setw(6) << Percent(cs.ratio(d));
      }
    }
    log << "\n";
  }
  fs::path stats_path = out / "wordnet_stats.json";
  if (fs::exists(stats_path)) {
    json stats = json::parse(ReadFile(stats_path.string()));
    log << "Wordnets\n";
    log << "  version  links synsets  words     cs  poly\n";
    for (const json &v : stats["versions"]) {
      log << "  " << std::left << std::setw(7) << v["version"].get<std::string>()
          << std::right << std::setw(6) << v["links"].get<size_t>()
          << std::setw(8) << v["synsets"].get<size_t>() << std::setw(7)
          << v["words"].get<size_t>() << std::setw(7)
          << (v["cs"].is_null() ? std::string("-")
                                : Percent(v["cs"].get<double>()))
          << std::setw(6) << v["poly_links"].get<size_t>() << "\n";
    }
  }
}

void StageServe(const PipelineConfig &c, Manifest &manifest, std::ostream &log) {
  manifest.Require(Stage::kSample);
  LexicalData data = LoadSources(c);
  auto sets = ReadLinkSets(c.out, nullptr);
  json doc = json::parse(ReadFile((fs::path(c.out) / "samples.json").string()));
  std::vector<Sample> samples;
  for (const json &s : doc["samples"]) samples.push_back(SampleFromJson(s));
  VerdictStore store(c.verdicts_path());
  ValidationService service(data.tax, data.hbil, data.mono, std::move(sets),
                            std::move(samples), store);
  httplib::Server server;
  std::optional<std::string> ui;
  if (!c.ui_dir.empty()) ui = c.ui_dir;
  InstallRoutes(server, service, ui);
  log << "serve: listening on http://" << c.host << ":" << c.port << "\n"
      << std::flush;
  if (!server.listen(c.host, c.port)) {
    throw UsageError("cannot listen on " + c.host + ":" + std::to_string(c.port));
  }
}

}  // namespace

std::string_view StageName(Stage s) {
  switch (s) {
    case Stage::kLoad: return "load";
    case Stage::kClass: return "class";
    case Stage::kStructural: return "structural";
    case Stage::kCd: return "cd";
    case Stage::kSample: return "sample";
    case Stage::kCombine: return "combine";
    case Stage::kAssemble: return "assemble";
    case Stage::kServe: return "serve";
    case Stage::kStats: return "stats";
  }
  return "load";
}

Stage ParseStage(std::string_view name) {
  for (Stage s : {Stage::kLoad, Stage::kClass, Stage::kStructural, Stage::kCd,
                  Stage::kSample, Stage::kCombine, Stage::kAssemble,
                  Stage::kServe, Stage::kStats}) {
    if (StageName(s) == name) return s;
  }
  throw UsageError("unknown stage '" + std::string(name) + "'");
}

PipelineConfig::PipelineConfig() : base_methods(DefaultBaseMethods()) {}

std::string PipelineConfig::verdicts_path() const {
  if (!verdicts.empty()) return verdicts;
  return (fs::path(out) / "verdicts.jsonl").string();
}

void PipelineConfig::Validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw UsageError("threshold must lie in [0,1]");
  }
  if (!(sample_fraction > 0.0 && sample_fraction <= 1.0)) {
    throw UsageError("sample_fraction must lie in (0,1]");
  }
  if (taxonomy.empty() || bilingual_es_en.empty() || bilingual_en_es.empty()) {
    throw UsageError("taxonomy, bilingual_es_en and bilingual_en_es are required");
  }
  if (out.empty()) throw UsageError("out directory is required");
  for (const std::string &m : base_methods) {
    if (!IsMethodTag(m)) throw UsageError("unknown base method '" + m + "'");
  }
  for (const auto *overrides : {&method_cs, &cell_cs}) {
    for (const auto &[tag, value] : *overrides) {
      if (!IsMethodTag(tag) && !IsCellTag(tag)) {
        throw UsageError("unknown method or cell tag '" + tag + "'");
      }
      if (!(value >= 0.0 && value <= 1.0)) {
        throw UsageError("CS for '" + tag + "' must lie in [0,1]");
      }
    }
  }
}

PipelineConfig ConfigFromJson(const json &j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  PipelineConfig c;
  try {
    for (const auto &[key, value] : j.items()) {
      if (key == "taxonomy") c.taxonomy = value.get<std::string>();
      else if (key == "taxonomy_format")
        c.taxonomy_format = ParseTaxonomyFormat(value.get<std::string>());
      else if (key == "bilingual_es_en") c.bilingual_es_en = value.get<std::string>();
      else if (key == "bilingual_en_es") c.bilingual_en_es = value.get<std::string>();
      else if (key == "monolingual") c.monolingual = value.get<std::string>();
      else if (key == "out") c.out = value.get<std::string>();
      else if (key == "threshold") c.threshold = value.get<double>();
      else if (key == "sample_fraction") c.sample_fraction = value.get<double>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "base_methods")
        c.base_methods = value.get<std::vector<std::string>>();
      else if (key == "cs_measure")
        c.cs_measure = ParseCsMeasure(value.get<std::string>());
      else if (key == "method_cs")
        c.method_cs = value.get<std::map<std::string, double>>();
      else if (key == "cell_cs")
        c.cell_cs = value.get<std::map<std::string, double>>();
      else if (key == "verdicts") c.verdicts = value.get<std::string>();
      else if (key == "host") c.host = value.get<std::string>();
      else if (key == "port") c.port = value.get<int>();
      else if (key == "ui_dir") c.ui_dir = value.get<std::string>();
      else throw UsageError("unknown config key '" + key + "'");
    }
  } catch (const json::exception &e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
  return c;
}

json ConfigToJson(const PipelineConfig &c) {
  return {{"taxonomy", c.taxonomy},
          {"taxonomy_format",
           c.taxonomy_format == TaxonomyFormat::kTsv ? "tsv" : "wndb"},
          {"bilingual_es_en", c.bilingual_es_en},
          {"bilingual_en_es", c.bilingual_en_es},
          {"monolingual", c.monolingual},
          {"threshold", c.threshold},
          {"sample_fraction", c.sample_fraction},
          {"seed", c.seed},
          {"base_methods", c.base_methods},
          {"cs_measure", std::string(CsMeasureName(c.cs_measure))},
          {"method_cs", c.method_cs},
          {"cell_cs", c.cell_cs},
          {"verdicts", c.verdicts}};
}

std::string FileDigest(const std::string &path) {
  if (!fs::exists(path) || fs::is_directory(path)) return "absent";
  std::string content = ReadFile(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : content) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

void RunStage(const PipelineConfig &config, Stage stage, std::ostream &log) {
  config.Validate();
  fs::create_directories(config.out);
  Manifest manifest(config.out);
  switch (stage) {
    case Stage::kLoad: StageLoad(config, manifest, log); break;
    case Stage::kClass: StageClass(config, manifest, log); break;
    case Stage::kStructural: StageStructural(config, manifest, log); break;
    case Stage::kCd: StageCd(config, manifest, log); break;
    case Stage::kSample: StageSample(config, manifest, log); break;
    case Stage::kCombine: StageCombine(config, manifest, log); break;
    case Stage::kAssemble: StageAssemble(config, manifest, log); break;
    case Stage::kServe: StageServe(config, manifest, log); break;
    case Stage::kStats: StageStats(config, manifest, log); break;
  }
}

}  // namespace lexiweave
