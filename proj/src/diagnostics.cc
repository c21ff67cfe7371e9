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

#include "lexiweave/diagnostics.h"

#include <stdexcept>

#include "lexiweave/errors.h"

namespace lexiweave {

std::string_view DiagnosticName(Diagnostic d) {
  switch (d) {
    case Diagnostic::kOk: return "ok";
    case Diagnostic::kKo: return "ko";
    case Diagnostic::kHypo: return "hypo";
    case Diagnostic::kHyper: return "hyper";
    case Diagnostic::kNear: return "near";
  }
  return "ko";
}

std::optional<Diagnostic> ParseDiagnostic(std::string_view name) {
  for (Diagnostic d : kAllDiagnostics) {
    if (DiagnosticName(d) == name) return d;
  }
  return std::nullopt;
}

CsMeasure ParseCsMeasure(std::string_view name) {
  if (name == "ok") return CsMeasure::kOk;
  if (name == "ok_plus_near") return CsMeasure::kOkPlusNear;
  throw UsageError("unknown cs_measure: " + std::string(name));
}

std::string_view CsMeasureName(CsMeasure m) {
  return m == CsMeasure::kOk ? "ok" : "ok_plus_near";
}

size_t DiagnosticCounts::total() const {
  size_t n = 0;
  for (size_t c : counts) n += c;
  return n;
}

double MethodCS::confidence(CsMeasure m) const {
  if (m == CsMeasure::kOk) return ok();
  return ok() + ratio(Diagnostic::kNear);
}

MethodCS ComputeMethodCS(std::string method, const DiagnosticCounts &counts) {
  const size_t total = counts.total();
  if (total == 0) {
    throw std::invalid_argument("no verdicts for '" + method + "'");
  }
  MethodCS cs;
  cs.method = std::move(method);
  cs.sample_size = total;
  for (size_t i = 0; i < 5; ++i) {
    cs.ratios[i] = static_cast<double>(counts.counts[i]) /
                   static_cast<double>(total);
  }
  return cs;
}

nlohmann::json MethodCSToJson(const MethodCS &cs) {
  nlohmann::json j = {{"method", cs.method}, {"sample_size", cs.sample_size}};
  for (Diagnostic d : kAllDiagnostics) {
    j[std::string(DiagnosticName(d))] = cs.ratio(d);
  }
  return j;
}

}  // namespace lexiweave
