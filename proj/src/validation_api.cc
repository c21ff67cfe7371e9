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

#include "lexiweave/validation_api.h"

#include <stdexcept>

#include "httplib.h"

namespace lexiweave {

namespace {

using json = nlohmann::json;

ApiResponse Error(int status, const std::string &message) {
  return {status, {{"error", message}}};
}

json LinkJson(const LinkCandidate &l) {
  json j = {{"source_word", l.source_word},
            {"synset", l.synset},
            {"method", l.method},
            {"evidence", std::vector<std::string>(l.evidence.begin(),
                                                  l.evidence.end())}};
  j["score"] = l.score ? json(*l.score) : json(nullptr);
  return j;
}

void Reply(httplib::Response &res, const ApiResponse &r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json; charset=utf-8");
}

}  // namespace

ValidationService::ValidationService(const Taxonomy &tax,
                                     const BilingualLexicon &hbil,
                                     const MonolingualDictionary &mono,
                                     std::map<std::string, LinkSet> linksets,
                                     std::vector<Sample> samples,
                                     VerdictStore &store)
    : tax_(tax),
      hbil_(hbil),
      mono_(mono),
      linksets_(std::move(linksets)),
      samples_(std::move(samples)),
      store_(store) {}

const Sample *ValidationService::FindSample(std::string_view id) const {
  for (const Sample &s : samples_) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

json ValidationService::SynsetBrief(SynsetIndex s) const {
  return {{"id", tax_.id(s)}, {"variants", tax_.synset(s).variants}};
}

json ValidationService::Translations(std::string_view lemma) const {
  json out = json::array();
  for (size_t i : hbil_.BySource(lemma)) {
    const TranslationPair &p = hbil_.pairs()[i];
    json t = {{"target", p.target_lemma},
              {"origin", std::string(OriginName(p.origin))}};
    t["field"] = p.field_id ? json(*p.field_id) : json(nullptr);
    out.push_back(std::move(t));
  }
  return out;
}

json ValidationService::Definitions(std::string_view lemma) const {
  json out = json::array();
  for (const MonolingualEntry *e : mono_.EntriesFor(lemma)) {
    std::string text;
    for (const std::string &tok : e->definition) {
      if (!text.empty()) text += ' ';
      text += tok;
    }
    json d = {{"sense_no", e->sense_no}, {"definition", text}};
    d["genus"] = e->genus ? json(*e->genus) : json(nullptr);
    out.push_back(std::move(d));
  }
  return out;
}

size_t ValidationService::JudgedBy(const Sample &s,
                                   std::string_view annotator) const {
  size_t n = 0;
  for (const Verdict &v : store_.ForSample(s.id)) {
    if (v.annotator == annotator) ++n;
  }
  return n;
}

ApiResponse ValidationService::ListSamples() const {
  json out = json::array();
  for (const Sample &s : samples_) {
    out.push_back({{"id", s.id},
                   {"method", s.method},
                   {"size", s.links.size()},
                   {"fraction", s.fraction},
                   {"seed", s.seed},
                   {"verdicts", store_.ForSample(s.id).size()}});
  }
  return {200, {{"samples", out}}};
}

ApiResponse ValidationService::Next(std::string_view sample_id,
                                    std::string_view annotator) const {
  const Sample *s = FindSample(sample_id);
  if (!s) return Error(404, "unknown sample " + std::string(sample_id));
  if (annotator.empty()) return Error(400, "annotator is required");

  const size_t judged = JudgedBy(*s, annotator);
  for (size_t pos = 0; pos < s->links.size(); ++pos) {
    const LinkCandidate &link = s->links[pos];
    if (store_.Find(s->id, link.source_word, link.synset, annotator)) continue;
    auto idx = tax_.Find(link.synset);
    if (!idx) return Error(500, "sample synset " + link.synset + " not in taxonomy");
    json chain = json::array();
    for (SynsetIndex c : tax_.HypernymChain(*idx)) chain.push_back(SynsetBrief(c));
    json hyponyms = json::array();
    for (SynsetIndex c : tax_.hyponyms(*idx)) hyponyms.push_back(SynsetBrief(c));
    json synset = SynsetBrief(*idx);
    synset["depth"] = tax_.depth(*idx);
    return {200,
            {{"sample_id", s->id},
             {"done", false},
             {"position", pos},
             {"total", s->links.size()},
             {"judged", judged},
             {"link", LinkJson(link)},
             {"synset", synset},
             {"hypernym_chain", chain},
             {"hyponyms", hyponyms},
             {"translations", Translations(link.source_word)},
             {"definitions", Definitions(link.source_word)}}};
  }
  json done = {{"sample_id", s->id},
               {"done", true},
               {"total", s->links.size()},
               {"judged", judged},
               {"ratios", nullptr}};
  auto verdicts = store_.ForSample(s->id);
  if (!verdicts.empty()) {
    done["ratios"] = MethodCSToJson(ComputeDiagnosticRatios(*s, verdicts).cs);
  }
  return {200, done};
}

ApiResponse ValidationService::PostVerdict(const json &body) {
  for (const char *key :
       {"sample_id", "source_word", "synset", "diagnostic", "annotator"}) {
    if (!body.is_object() || !body.contains(key) || !body[key].is_string()) {
      return Error(400, std::string("missing string field '") + key + "'");
    }
  }
  const std::string sample_id = body["sample_id"];
  const std::string annotator = body["annotator"];
  const std::string diagnostic = body["diagnostic"];
  if (annotator.empty()) return Error(400, "annotator is required");
  if (!ParseDiagnostic(diagnostic)) {
    return Error(400, "unknown diagnostic '" + diagnostic + "'");
  }
  const Sample *s = FindSample(sample_id);
  if (!s) return Error(404, "unknown sample " + sample_id);
  const std::string source_word = body["source_word"];
  const std::string synset = body["synset"];
  if (!s->Find(source_word, synset)) {
    return Error(404, "link " + source_word + "->" + synset +
                          " is not in sample " + sample_id);
  }
  size_t stored = store_.Record(*s, source_word, synset, diagnostic, annotator);
  auto v = store_.Find(sample_id, source_word, synset, annotator);
  return {201, {{"stored", stored}, {"verdict", VerdictToJson(*v)}}};
}

ApiResponse ValidationService::GetSynset(std::string_view id) const {
  auto idx = tax_.Find(id);
  if (!idx) return Error(404, "unknown synset " + std::string(id));
  json parents = json::array();
  for (SynsetIndex p : tax_.hypernyms(*idx)) parents.push_back(SynsetBrief(p));
  json children = json::array();
  for (SynsetIndex c : tax_.hyponyms(*idx)) children.push_back(SynsetBrief(c));
  json out = SynsetBrief(*idx);
  out["depth"] = tax_.depth(*idx);
  out["hypernyms"] = parents;
  out["hyponyms"] = children;
  return {200, out};
}

ApiResponse ValidationService::GetWord(std::string_view lemma) const {
  json links = json::array();
  for (const auto &[method, set] : linksets_) {
    for (const auto &[key, link] : set.by_key()) {
      if (key.first == lemma) links.push_back(LinkJson(link));
    }
  }
  json translations = Translations(lemma);
  json definitions = Definitions(lemma);
  if (translations.empty() && links.empty() && definitions.empty()) {
    return Error(404, "unknown word " + std::string(lemma));
  }
  return {200,
          {{"lemma", lemma},
           {"translations", translations},
           {"links", links},
           {"definitions", definitions}}};
}

ApiResponse ValidationService::Stats() const {
  json out = json::array();
  for (const Sample &s : samples_) {
    json entry = {{"sample_id", s.id},
                  {"method", s.method},
                  {"total", s.links.size()},
                  {"cs", nullptr}};
    auto verdicts = store_.ForSample(s.id);
    size_t pending = s.links.size();
    if (!verdicts.empty()) {
      SampleReport r = ComputeDiagnosticRatios(s, verdicts);
      entry["cs"] = MethodCSToJson(r.cs);
      pending = r.pending;
    }
    entry["pending"] = pending;
    out.push_back(std::move(entry));
  }
  return {200, {{"methods", out}}};
}

void InstallRoutes(httplib::Server &server, ValidationService &service,
                   const std::optional<std::string> &static_dir) {
  server.Get("/api/samples", [&service](const httplib::Request &,
                                        httplib::Response &res) {
    Reply(res, service.ListSamples());
  });
  server.Get(R"(/api/samples/([^/]+)/next)",
             [&service](const httplib::Request &req, httplib::Response &res) {
               Reply(res, service.Next(req.matches[1].str(),
                                       req.get_param_value("annotator")));
             });
  server.Post("/api/verdicts", [&service](const httplib::Request &req,
                                          httplib::Response &res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) {
      Reply(res, Error(400, "request body is not JSON"));
      return;
    }
    Reply(res, service.PostVerdict(body));
  });
  server.Get(R"(/api/synsets/([^/]+))",
             [&service](const httplib::Request &req, httplib::Response &res) {
               Reply(res, service.GetSynset(req.matches[1].str()));
             });
  server.Get(R"(/api/words/([^/]+))",
             [&service](const httplib::Request &req, httplib::Response &res) {
               Reply(res, service.GetWord(req.matches[1].str()));
             });
  server.Get("/api/stats", [&service](const httplib::Request &,
                                      httplib::Response &res) {
    Reply(res, service.Stats());
  });
  if (static_dir) server.set_mount_point("/", *static_dir);
}

}  // namespace lexiweave
