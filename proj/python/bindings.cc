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

// Python bindings for the lexiweave core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lexiweave/bilingual.h"
#include "lexiweave/cd_methods.h"
#include "lexiweave/class_methods.h"
#include "lexiweave/combiner.h"
#include "lexiweave/cooccurrence.h"
#include "lexiweave/coverage.h"
#include "lexiweave/distance.h"
#include "lexiweave/errors.h"
#include "lexiweave/lemma.h"
#include "lexiweave/monolingual.h"
#include "lexiweave/pipeline.h"
#include "lexiweave/structural.h"
#include "lexiweave/taxonomy.h"
#include "lexiweave/validator.h"

namespace py = pybind11;
using namespace lexiweave;

namespace {

SynsetIndex IndexOf(const Taxonomy &tax, const std::string &id) {
  auto i = tax.Find(id);
  if (!i) throw py::key_error("unknown synset " + id);
  return *i;
}

std::map<std::string, LinkSet> ByMethod(const std::vector<LinkSet> &sets) {
  std::map<std::string, LinkSet> out;
  for (const LinkSet &s : sets) out.emplace(s.method(), s);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bilingual-dictionary to taxonomy linking (lexiweave core)";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def("normalize_lemma", &NormalizeLemma, py::arg("text"));

  py::class_<Taxonomy>(m, "Taxonomy")
      .def_static("from_tsv", [](const std::string &text) { return ParseTaxonomyTsv(text); })
      .def_static("load",
                  [](const std::string &path, const std::string &format) {
                    return LoadTaxonomy(path, ParseTaxonomyFormat(format));
                  },
                  py::arg("path"), py::arg("format") = "tsv")
      .def("__len__", &Taxonomy::size)
      .def("__contains__", [](const Taxonomy &t, const std::string &lemma) {
        return t.Contains(lemma);
      })
      .def("ids", [](const Taxonomy &t) {
        std::vector<std::string> out;
        for (SynsetIndex i = 0; i < t.size(); ++i) out.push_back(t.id(i));
        return out;
      })
      .def("depth", [](const Taxonomy &t, const std::string &id) {
        return t.depth(IndexOf(t, id));
      })
      .def("variants", [](const Taxonomy &t, const std::string &id) {
        return t.synset(IndexOf(t, id)).variants;
      })
      .def("hypernyms", [](const Taxonomy &t, const std::string &id) {
        std::vector<std::string> out;
        for (SynsetIndex h : t.hypernyms(IndexOf(t, id))) out.push_back(t.id(h));
        return out;
      })
      .def("hyponyms", [](const Taxonomy &t, const std::string &id) {
        std::vector<std::string> out;
        for (SynsetIndex h : t.hyponyms(IndexOf(t, id))) out.push_back(t.id(h));
        return out;
      })
      .def("synsets_of", [](const Taxonomy &t, const std::string &lemma) {
        std::vector<std::string> out;
        for (SynsetIndex s : t.SynsetsOf(lemma)) out.push_back(t.id(s));
        return out;
      })
      .def("hypernym_chain", [](const Taxonomy &t, const std::string &id) {
        std::vector<std::string> out;
        for (SynsetIndex s : t.HypernymChain(IndexOf(t, id))) out.push_back(t.id(s));
        return out;
      });

  py::class_<BilingualLexicon>(m, "BilingualLexicon")
      .def_static("from_tsv",
                  [](const std::string &text, const std::string &origin) {
                    return ParseBilingual(text, ParseOrigin(origin));
                  },
                  py::arg("text"), py::arg("origin") = "es_en")
      .def_static("load",
                  [](const std::string &path, const std::string &origin) {
                    return LoadBilingual(path, ParseOrigin(origin));
                  },
                  py::arg("path"), py::arg("origin") = "es_en")
      .def("__len__", &BilingualLexicon::size)
      .def("pairs", [](const BilingualLexicon &b) {
        py::list out;
        for (const TranslationPair &p : b.pairs()) {
          out.append(py::make_tuple(p.source_lemma, p.target_lemma,
                                    p.field_id ? py::cast(*p.field_id) : py::none(),
                                    std::string(OriginName(p.origin))));
        }
        return out;
      })
      .def("translations_of", &BilingualLexicon::TranslationsOf);

  m.def("merge_bilinguals", &MergeBilinguals, py::arg("es_en"), py::arg("en_es"));

  py::class_<MonolingualDictionary>(m, "MonolingualDictionary")
      .def_static("from_jsonl", [](const std::string &text) { return ParseMonolingual(text); })
      .def_static("load", &LoadMonolingual)
      .def("__len__", &MonolingualDictionary::size)
      .def("headwords", [](const MonolingualDictionary &d) {
        return std::vector<std::string>(d.headwords().begin(), d.headwords().end());
      });

  m.def("coverage", [](const BilingualLexicon &h, const Taxonomy &t) {
    return CoverageToJson(ComputeCoverage(h, t)).dump();
  }, "Coverage report as a JSON string.");

  py::class_<LinkSet>(m, "LinkSet")
      .def(py::init<std::string>())
      .def("add",
           [](LinkSet &s, std::string word, std::string synset,
              std::optional<double> score) {
             s.Add(std::move(word), std::move(synset), {}, score);
           },
           py::arg("source_word"), py::arg("synset"), py::arg("score") = py::none())
      .def_property_readonly("method", &LinkSet::method)
      .def("__len__", &LinkSet::size)
      .def("keys", [](const LinkSet &s) {
        std::set<LinkKey> keys = s.keys();
        return std::vector<LinkKey>(keys.begin(), keys.end());
      })
      .def("to_tsv", &SerializeLinkSet);

  m.def("run_class_methods", [](const BilingualLexicon &h, const Taxonomy &t) {
    return ByMethod(RunClassMethods(h, t));
  });

  m.def("structural_records",
        [](const BilingualLexicon &h, const Taxonomy &t, const std::string &kind,
           bool prune) {
          auto records = ApplyStructuralCriterion(h, t, ParseStructuralCriterion(kind));
          if (prune) records = PruneSubsumed(std::move(records));
          py::list out;
          for (const StructuralRecord &r : records) {
            out.append(py::make_tuple(
                r.source_word,
                std::vector<std::string>(r.ew_set.begin(), r.ew_set.end()),
                std::vector<std::string>(r.synsets.begin(), r.synsets.end())));
          }
          return out;
        },
        py::arg("hbil"), py::arg("taxonomy"), py::arg("criterion"),
        py::arg("prune") = true);

  m.def("conceptual_distance",
        [](const Taxonomy &t, const std::vector<std::vector<std::string>> &words) {
          std::vector<std::vector<SynsetIndex>> idx;
          for (const auto &w : words) {
            std::vector<SynsetIndex> v;
            for (const std::string &id : w) v.push_back(IndexOf(t, id));
            idx.push_back(std::move(v));
          }
          DistanceResult r = ConceptualDistance(t, idx);
          std::vector<std::string> chosen;
          for (SynsetIndex s : r.chosen) chosen.push_back(t.id(s));
          return py::make_tuple(r.distance, chosen);
        },
        py::arg("taxonomy"), py::arg("words"),
        "Returns (distance, chosen synset ids); distance is inf when disconnected.");

  m.def("association_ratio",
        [](size_t ab, size_t a, size_t b, size_t n) { return AssociationRatio(ab, a, b, n); });

  m.def("run_cd_methods",
        [](const MonolingualDictionary &mono, const BilingualLexicon &h,
           const Taxonomy &t) {
          auto pairs = ExtractCooccurrences(mono);
          return ByMethod({RunCd1(pairs, h, t), RunCd2(mono, h, t), RunCd3(h, t)});
        });

  m.def("build_base_wordnet",
        [](const std::map<std::string, LinkSet> &sets,
           const std::vector<std::string> &methods,
           const std::map<std::string, double> &cs) {
          return SerializeWordnet(BuildBaseWordnet(sets, methods, cs));
        },
        py::arg("linksets"), py::arg("methods"), py::arg("method_cs") = py::dict(),
        "Base wordnet serialized as TSV.");

  m.def("select_accepted_cells",
        [](const std::map<std::string, LinkSet> &sets,
           const std::vector<std::string> &methods,
           const std::map<std::string, double> &cell_cs, double threshold) {
          auto cells = IntersectAll(sets, methods);
          auto links = SelectAcceptedCells(cells, cell_cs, threshold);
          std::vector<std::string> accepted;
          for (const IntersectionCell &c : cells) {
            if (c.accepted) accepted.push_back(c.tag());
          }
          std::vector<LinkKey> keys;
          for (const WordnetLink &l : links) keys.emplace_back(l.source_word, l.synset);
          return py::make_tuple(accepted, keys);
        },
        py::arg("linksets"), py::arg("methods"), py::arg("cell_cs"),
        py::arg("threshold") = kDefaultThreshold,
        "Returns (accepted cell tags, accepted link keys).");

  m.def("draw_sample",
        [](const LinkSet &s, double fraction, std::uint64_t seed) {
          std::vector<LinkKey> keys;
          for (const LinkCandidate &l : DrawSample(s, fraction, seed).links) {
            keys.push_back(l.key());
          }
          return keys;
        },
        py::arg("linkset"), py::arg("fraction") = 0.10, py::arg("seed") = 1);

  m.def("run_stage",
        [](const std::string &config_json, const std::string &stage) {
          PipelineConfig c = ConfigFromJson(nlohmann::json::parse(config_json));
          std::ostringstream log;
          RunStage(c, ParseStage(stage), log);
          return log.str();
        },
        py::arg("config_json"), py::arg("stage"),
        "Runs one pipeline stage and returns its log.");
}
