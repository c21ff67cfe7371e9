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

#ifndef LEXIWEAVE_VALIDATOR_H_
#define LEXIWEAVE_VALIDATOR_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "lexiweave/diagnostics.h"
#include "lexiweave/links.h"
#include "lexiweave/taxonomy.h"

namespace lexiweave {

// Links drawn from one method's (or cell's) output for hand validation.
struct Sample {
  std::string id;
  std::string method;
  std::vector<LinkCandidate> links;  // rank order
  double fraction = 0;
  std::uint64_t seed = 0;

  const LinkCandidate *Find(std::string_view source_word,
                            std::string_view synset) const;
};

// Keyed hash used to rank links for sampling.
std::uint64_t SampleRank(std::uint64_t seed, std::string_view source_word,
                         std::string_view synset);

// Ranks links by SampleRank and keeps the first round(fraction * n). The
// sample id defaults to the method tag. Throws std::invalid_argument on an
// empty set or a fraction outside (0,1].
Sample DrawSample(const LinkSet &links, double fraction, std::uint64_t seed,
                  std::string id = "");

nlohmann::json SampleToJson(const Sample &s);
Sample SampleFromJson(const nlohmann::json &j);

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string NowIso8601();

nlohmann::json VerdictToJson(const Verdict &v);
Verdict VerdictFromJson(const nlohmann::json &j);

// Verdicts keyed on (sample, link, annotator); re-recording replaces. Backed
// by an append-only JSON Lines log that is replayed on open. Readers share a
// lock; writers are serialized.
class VerdictStore {
 public:
  VerdictStore() = default;
  // Replays `log_path` when it exists; later records are appended to it.
  explicit VerdictStore(std::string log_path);

  VerdictStore(const VerdictStore &) = delete;
  VerdictStore &operator=(const VerdictStore &) = delete;

  // Returns the number of verdicts stored for the sample afterwards. Throws
  // std::invalid_argument for a link outside the sample or an unknown
  // diagnostic name.
  size_t Record(const Sample &sample, std::string_view source_word,
                std::string_view synset, std::string_view diagnostic,
                std::string_view annotator, std::string timestamp = "");

  std::vector<Verdict> ForSample(std::string_view sample_id) const;
  std::vector<Verdict> All() const;
  std::optional<Verdict> Find(std::string_view sample_id,
                              std::string_view source_word,
                              std::string_view synset,
                              std::string_view annotator) const;
  size_t size() const;

  // Compacted JSON Lines in key order.
  std::string Serialize() const;
  // Replays a log; later lines win.
  void Replay(std::string_view text);

 private:
  using Key = std::tuple<std::string, std::string, std::string, std::string>;
  void Put(Verdict v);

  mutable std::shared_mutex mu_;
  std::string log_path_;
  std::map<Key, Verdict> verdicts_;
};

struct SampleReport {
  MethodCS cs;
  size_t judged_links = 0;
  size_t pending = 0;  // sample links without any verdict
};

// Exact diagnostic proportions over the sample's verdicts. Throws
// std::invalid_argument when there are none.
SampleReport ComputeDiagnosticRatios(const Sample &sample,
                                     const std::vector<Verdict> &verdicts);

DiagnosticCounts CountDiagnostics(const std::vector<Verdict> &verdicts);

// Diagnosis against a gold synset: ok when equal, hyper when the link's
// synset is a strict ancestor of gold, hypo when a strict descendant, ko
// otherwise. Never returns near. Throws std::invalid_argument without gold.
Diagnostic AutoDiagnose(const Taxonomy &tax, std::string_view source_word,
                        std::string_view synset,
                        const std::map<std::string, std::string> &gold);

}  // namespace lexiweave

#endif  // LEXIWEAVE_VALIDATOR_H_
