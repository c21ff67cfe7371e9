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

#ifndef LEXIWEAVE_PIPELINE_H_
#define LEXIWEAVE_PIPELINE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexiweave/diagnostics.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

enum class Stage {
  kLoad, kClass, kStructural, kCd, kSample, kCombine, kAssemble, kServe, kStats
};

std::string_view StageName(Stage s);
Stage ParseStage(std::string_view name);

struct PipelineConfig {
  std::string taxonomy;
  TaxonomyFormat taxonomy_format = TaxonomyFormat::kTsv;
  std::string bilingual_es_en;
  std::string bilingual_en_es;
  std::string monolingual;  // optional
  std::string out = "out";
  double threshold = 0.85;
  double sample_fraction = 0.10;
  std::uint64_t seed = 1;
  std::vector<std::string> base_methods;
  CsMeasure cs_measure = CsMeasure::kOk;
  // CS values that override measured ones, keyed by method or cell tag.
  std::map<std::string, double> method_cs;
  std::map<std::string, double> cell_cs;
  std::string verdicts;  // empty: <out>/verdicts.jsonl
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string ui_dir;

  PipelineConfig();

  std::string verdicts_path() const;
  // Throws UsageError on out-of-range fractions or unknown method tags.
  void Validate() const;
};

// Unknown keys are rejected.
PipelineConfig ConfigFromJson(const nlohmann::json &j);
// Snapshot recorded in the manifest. Omits `out` so identical runs into
// different directories record identical manifests.
nlohmann::json ConfigToJson(const PipelineConfig &c);

// Hex FNV-1a digest of a file, or "absent".
std::string FileDigest(const std::string &path);

// Runs one stage, writing artifacts under config.out and progress lines to
// `log`. Throws DataError for missing or stale prerequisites and bad data,
// UsageError for configuration problems. kServe blocks until the server stops.
void RunStage(const PipelineConfig &config, Stage stage, std::ostream &log);

}  // namespace lexiweave

#endif  // LEXIWEAVE_PIPELINE_H_
