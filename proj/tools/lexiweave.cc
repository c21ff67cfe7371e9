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

// Command-line driver for the lexiweave pipeline.
//
//   lexiweave <stage> --config <file> [--out <dir>] [--threshold 0.85]
//             [--sample-fraction 0.10] [--seed N] ...
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lexiweave/errors.h"
#include "lexiweave/pipeline.h"
#include "lexiweave/taxonomy.h"

namespace {

constexpr int kUsage = 1;
constexpr int kData = 2;

// Parses "tag=value,tag=value" into a CS override map.
std::map<std::string, double> ParseCsOverrides(const std::string &text) {
  std::map<std::string, double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma - start);
    if (!item.empty()) {
      size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw lexiweave::UsageError("expected tag=value, got '" + item + "'");
      }
      try {
        out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
      } catch (const std::exception &) {
        throw lexiweave::UsageError("bad CS value in '" + item + "'");
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Builds a source-language wordnet by linking bilingual "
               "dictionary entries to an English taxonomy."};
  app.set_version_flag("--version", "lexiweave 0.1.0");

  std::string stage_name;
  std::string config_path;
  std::optional<std::string> out, taxonomy, taxonomy_format, es_en, en_es,
      monolingual, cs_measure, method_cs, cell_cs, verdicts, host, ui_dir;
  std::optional<double> threshold, sample_fraction;
  std::optional<std::uint64_t> seed;
  std::optional<int> port;
  std::optional<std::vector<std::string>> base_methods;

  app.add_option("stage", stage_name,
                 "load, class, structural, cd, sample, combine, assemble, "
                 "serve or stats")
      ->required();
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out, "Output directory");
  app.add_option("--threshold", threshold, "Cell acceptance threshold");
  app.add_option("--sample-fraction", sample_fraction, "Validation sample fraction");
  app.add_option("--seed", seed, "Sampling seed");
  app.add_option("--taxonomy", taxonomy, "Taxonomy file or WNDB directory");
  app.add_option("--taxonomy-format", taxonomy_format, "tsv or wndb");
  app.add_option("--bilingual-es-en", es_en, "es_en dictionary TSV");
  app.add_option("--bilingual-en-es", en_es, "en_es dictionary TSV");
  app.add_option("--monolingual", monolingual, "Monolingual JSONL");
  app.add_option("--base-methods", base_methods, "Methods forming the base wordnet")
      ->delimiter(',');
  app.add_option("--cs-measure", cs_measure, "ok or ok_plus_near");
  app.add_option("--method-cs", method_cs, "Method CS overrides, tag=value,...");
  app.add_option("--cell-cs", cell_cs, "Cell CS overrides, a+b=value,...");
  app.add_option("--verdicts", verdicts, "Verdict log path");
  app.add_option("--host", host, "Bind address for serve");
  app.add_option("--port", port, "Port for serve");
  app.add_option("--ui-dir", ui_dir, "Static UI directory for serve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    lexiweave::Stage stage = lexiweave::ParseStage(stage_name);
    std::string text;
    try {
      text = lexiweave::ReadFile(config_path);
    } catch (const std::exception &e) {
      throw lexiweave::UsageError("cannot read config " + config_path);
    }
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
      throw lexiweave::UsageError("config " + config_path + " is not valid JSON");
    }
    lexiweave::PipelineConfig config = lexiweave::ConfigFromJson(doc);
    // Input paths in the config file are relative to the file itself.
    const std::filesystem::path base =
        std::filesystem::path(config_path).parent_path();
    for (std::string *p : {&config.taxonomy, &config.bilingual_es_en,
                           &config.bilingual_en_es, &config.monolingual,
                           &config.verdicts, &config.ui_dir}) {
      if (!p->empty() && std::filesystem::path(*p).is_relative()) {
        *p = (base / *p).lexically_normal().string();
      }
    }
    if (out) config.out = *out;
    if (threshold) config.threshold = *threshold;
    if (sample_fraction) config.sample_fraction = *sample_fraction;
    if (seed) config.seed = *seed;
    if (taxonomy) config.taxonomy = *taxonomy;
    if (taxonomy_format) {
      config.taxonomy_format = lexiweave::ParseTaxonomyFormat(*taxonomy_format);
    }
    if (es_en) config.bilingual_es_en = *es_en;
    if (en_es) config.bilingual_en_es = *en_es;
    if (monolingual) config.monolingual = *monolingual;
    if (base_methods) config.base_methods = *base_methods;
    if (cs_measure) config.cs_measure = lexiweave::ParseCsMeasure(*cs_measure);
    if (method_cs) {
      for (auto &[k, v] : ParseCsOverrides(*method_cs)) config.method_cs[k] = v;
    }
    if (cell_cs) {
      for (auto &[k, v] : ParseCsOverrides(*cell_cs)) config.cell_cs[k] = v;
    }
    if (verdicts) config.verdicts = *verdicts;
    if (host) config.host = *host;
    if (port) config.port = *port;
    if (ui_dir) config.ui_dir = *ui_dir;
    lexiweave::RunStage(config, stage, std::cout);
  } catch (const lexiweave::UsageError &e) {
    std::cerr << "lexiweave: " << e.what() << "\n";
    return kUsage;
  } catch (const lexiweave::DataError &e) {
    std::cerr << "lexiweave: " << e.what() << "\n";
    return kData;
  } catch (const std::exception &e) {
    std::cerr << "lexiweave: " << e.what() << "\n";
    return kData;
  }
  return 0;
}
