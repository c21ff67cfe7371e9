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

#ifndef LEXIWEAVE_VALIDATION_API_H_
#define LEXIWEAVE_VALIDATION_API_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lexiweave/bilingual.h"
#include "lexiweave/links.h"
#include "lexiweave/monolingual.h"
#include "lexiweave/taxonomy.h"
#include "lexiweave/validator.h"

namespace httplib {
class Server;
}

namespace lexiweave {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Request handling behind the annotation HTTP API. Handlers only read the
// lexical data; verdicts go through the shared VerdictStore.
class ValidationService {
 public:
  ValidationService(const Taxonomy &tax, const BilingualLexicon &hbil,
                    const MonolingualDictionary &mono,
                    std::map<std::string, LinkSet> linksets,
                    std::vector<Sample> samples, VerdictStore &store);

  // GET /api/samples
  ApiResponse ListSamples() const;
  // GET /api/samples/{id}/next?annotator=
  ApiResponse Next(std::string_view sample_id, std::string_view annotator) const;
  // POST /api/verdicts
  ApiResponse PostVerdict(const nlohmann::json &body);
  // GET /api/synsets/{id}
  ApiResponse GetSynset(std::string_view id) const;
  // GET /api/words/{lemma}
  ApiResponse GetWord(std::string_view lemma) const;
  // GET /api/stats
  ApiResponse Stats() const;

  const Sample *FindSample(std::string_view id) const;

 private:
  nlohmann::json SynsetBrief(SynsetIndex s) const;
  nlohmann::json Translations(std::string_view lemma) const;
  nlohmann::json Definitions(std::string_view lemma) const;
  size_t JudgedBy(const Sample &s, std::string_view annotator) const;

  const Taxonomy &tax_;
  const BilingualLexicon &hbil_;
  const MonolingualDictionary &mono_;
  std::map<std::string, LinkSet> linksets_;
  std::vector<Sample> samples_;
  VerdictStore &store_;
};

// Registers the JSON API routes; optionally mounts static UI assets at "/".
void InstallRoutes(httplib::Server &server, ValidationService &service,
                   const std::optional<std::string> &static_dir = std::nullopt);

}  // namespace lexiweave

#endif  // LEXIWEAVE_VALIDATION_API_H_
