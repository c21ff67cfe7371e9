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

#include "lexiweave/validator.h"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"

namespace lexiweave {

namespace {

using json = nlohmann::json;

std::uint64_t Fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

const LinkCandidate *Sample::Find(std::string_view source_word,
                                  std::string_view synset) const {
  for (const LinkCandidate &l : links) {
    if (l.source_word == source_word && l.synset == synset) return &l;
  }
  return nullptr;
}

std::uint64_t SampleRank(std::uint64_t seed, std::string_view source_word,
                         std::string_view synset) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char seed_bytes[8];
  for (int i = 0; i < 8; ++i) seed_bytes[i] = static_cast<char>(seed >> (8 * i));
  h = Fnv1a(h, std::string_view(seed_bytes, 8));
  h = Fnv1a(h, source_word);
  h = Fnv1a(h, std::string_view("\0", 1));
  h = Fnv1a(h, synset);
  return Mix(h);
}

Sample DrawSample(const LinkSet &links, double fraction, std::uint64_t seed,
                  std::string id) {
  if (links.empty()) throw std::invalid_argument("cannot sample an empty link set");
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("sample fraction must lie in (0,1]");
  }
  std::vector<std::pair<std::uint64_t, LinkCandidate>> ranked;
  for (const auto &[key, link] : links.by_key()) {
    ranked.emplace_back(SampleRank(seed, key.first, key.second), link);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.key() < b.second.key();
  });
  const auto take = static_cast<size_t>(
      std::lround(fraction * static_cast<double>(ranked.size())));
  Sample s;
  s.id = id.empty() ? links.method() : std::move(id);
  s.method = links.method();
  s.fraction = fraction;
  s.seed = seed;
  for (size_t i = 0; i < take; ++i) s.links.push_back(ranked[i].second);
  return s;
}

json SampleToJson(const Sample &s) {
  json links = json::array();
  for (const LinkCandidate &l : s.links) {
    json item = {{"source_word", l.source_word},
                 {"synset", l.synset},
                 {"evidence", json(std::vector<std::string>(
                                  l.evidence.begin(), l.evidence.end()))}};
    item["score"] = l.score ? json(*l.score) : json(nullptr);
    links.push_back(std::move(item));
  }
  return {{"id", s.id},
          {"method", s.method},
          {"fraction", s.fraction},
          {"seed", s.seed},
          {"links", std::move(links)}};
}

Sample SampleFromJson(const json &j) {
  try {
    Sample s;
    s.id = j.at("id").get<std::string>();
    s.method = j.at("method").get<std::string>();
    s.fraction = j.at("fraction").get<double>();
    s.seed = j.at("seed").get<std::uint64_t>();
    for (const json &item : j.at("links")) {
      LinkCandidate l;
      l.source_word = item.at("source_word").get<std::string>();
      l.synset = item.at("synset").get<std::string>();
      l.method = s.method;
      for (const json &e : item.at("evidence")) l.evidence.insert(e.get<std::string>());
      if (item.contains("score") && !item["score"].is_null()) {
        l.score = item["score"].get<double>();
      }
      s.links.push_back(std::move(l));
    }
    return s;
  } catch (const json::exception &e) {
    throw DataError(std::string("bad sample record: ") + e.what());
  }
}

std::string NowIso8601() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

json VerdictToJson(const Verdict &v) {
  return {{"sample_id", v.sample_id},
          {"source_word", v.source_word},
          {"synset", v.synset},
          {"method", v.method},
          {"diagnostic", std::string(DiagnosticName(v.diagnostic))},
          {"annotator", v.annotator},
          {"timestamp", v.timestamp}};
}

Verdict VerdictFromJson(const json &j) {
  Verdict v;
  v.sample_id = j.at("sample_id").get<std::string>();
  v.source_word = j.at("source_word").get<std::string>();
  v.synset = j.at("synset").get<std::string>();
  v.method = j.at("method").get<std::string>();
  auto d = ParseDiagnostic(j.at("diagnostic").get<std::string>());
  if (!d) throw DataError("unknown diagnostic in verdict log");
  v.diagnostic = *d;
  v.annotator = j.at("annotator").get<std::string>();
  v.timestamp = j.value("timestamp", "");
  return v;
}

VerdictStore::VerdictStore(std::string log_path)
    : log_path_(std::move(log_path)) {
  if (!log_path_.empty() && std::filesystem::exists(log_path_)) {
    Replay(ReadFile(log_path_));
  }
}

void VerdictStore::Put(Verdict v) {
  Key key{v.sample_id, v.source_word, v.synset, v.annotator};
  verdicts_[key] = std::move(v);
}

size_t VerdictStore::Record(const Sample &sample, std::string_view source_word,
                            std::string_view synset,
                            std::string_view diagnostic,
                            std::string_view annotator, std::string timestamp) {
  auto d = ParseDiagnostic(diagnostic);
  if (!d) {
    throw std::invalid_argument("unknown diagnostic '" + std::string(diagnostic) +
                                "'");
  }
  if (!sample.Find(source_word, synset)) {
    throw std::invalid_argument("link " + std::string(source_word) + "->" +
                                std::string(synset) + " is not in sample " +
                                sample.id);
  }
  Verdict v{sample.id,
            std::string(source_word),
            std::string(synset),
            sample.method,
            *d,
            std::string(annotator),
            timestamp.empty() ? NowIso8601() : std::move(timestamp)};

  std::unique_lock lock(mu_);
  if (!log_path_.empty()) {
    std::ofstream out(log_path_, std::ios::app | std::ios::binary);
    if (!out) throw DataError("cannot append to " + log_path_);
    out << VerdictToJson(v).dump() << '\n';
  }
  Put(std::move(v));
  size_t n = 0;
  for (const auto &[key, verdict] : verdicts_) {
    if (std::get<0>(key) == sample.id) ++n;
  }
  return n;
}

std::vector<Verdict> VerdictStore::ForSample(std::string_view sample_id) const {
  std::shared_lock lock(mu_);
  std::vector<Verdict> out;
  for (const auto &[key, v] : verdicts_) {
    if (std::get<0>(key) == sample_id) out.push_back(v);
  }
  return out;
}

std::vector<Verdict> VerdictStore::All() const {
  std::shared_lock lock(mu_);
  std::vector<Verdict> out;
  for (const auto &[key, v] : verdicts_) out.push_back(v);
  return out;
}

std::optional<Verdict> VerdictStore::Find(std::string_view sample_id,
                                          std::string_view source_word,
                                          std::string_view synset,
                                          std::string_view annotator) const {
  std::shared_lock lock(mu_);
  auto it = verdicts_.find(Key{std::string(sample_id), std::string(source_word),
                               std::string(synset), std::string(annotator)});
  if (it == verdicts_.end()) return std::nullopt;
  return it->second;
}

size_t VerdictStore::size() const {
  std::shared_lock lock(mu_);
  return verdicts_.size();
}

std::string VerdictStore::Serialize() const {
  std::shared_lock lock(mu_);
  std::string out;
  for (const auto &[key, v] : verdicts_) out += VerdictToJson(v).dump() + '\n';
  return out;
}

void VerdictStore::Replay(std::string_view text) {
  std::unique_lock lock(mu_);
  size_t line_no = 0;
  for (const std::string &line : SplitFields(text, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    try {
      Put(VerdictFromJson(json::parse(line)));
    } catch (const json::exception &e) {
      throw DataError("verdict log line " + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
}

DiagnosticCounts CountDiagnostics(const std::vector<Verdict> &verdicts) {
  DiagnosticCounts c;
  for (const Verdict &v : verdicts) c.Add(v.diagnostic);
  return c;
}

SampleReport ComputeDiagnosticRatios(const Sample &sample,
                                     const std::vector<Verdict> &verdicts) {
  std::vector<Verdict> relevant;
  std::set<LinkKey> judged;
  for (const Verdict &v : verdicts) {
    if (v.sample_id != sample.id || !sample.Find(v.source_word, v.synset)) {
      continue;
    }
    relevant.push_back(v);
    judged.insert({v.source_word, v.synset});
  }
  SampleReport r;
  r.cs = ComputeMethodCS(sample.id, CountDiagnostics(relevant));
  r.judged_links = judged.size();
  r.pending = sample.links.size() - judged.size();
  return r;
}

Diagnostic AutoDiagnose(const Taxonomy &tax, std::string_view source_word,
                        std::string_view synset,
                        const std::map<std::string, std::string> &gold) {
  auto g = gold.find(std::string(source_word));
  if (g == gold.end()) {
    throw std::invalid_argument("no gold synset for '" +
                                std::string(source_word) + "'");
  }
  auto link = tax.Find(synset);
  auto correct = tax.Find(g->second);
  if (!link || !correct) throw std::invalid_argument("unknown synset id");
  if (*link == *correct) return Diagnostic::kOk;
  if (tax.IsStrictAncestor(*link, *correct)) return Diagnostic::kHyper;
  if (tax.IsStrictAncestor(*correct, *link)) return Diagnostic::kHypo;
  return Diagnostic::kKo;
}

}  // namespace lexiweave
