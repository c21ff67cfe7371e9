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

#ifndef LEXIWEAVE_DIAGNOSTICS_H_
#define LEXIWEAVE_DIAGNOSTICS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace lexiweave {

// Hand-validation verdict classes for a link.
enum class Diagnostic { kOk = 0, kKo, kHypo, kHyper, kNear };

inline constexpr std::array<Diagnostic, 5> kAllDiagnostics = {
    Diagnostic::kOk, Diagnostic::kKo, Diagnostic::kHypo, Diagnostic::kHyper,
    Diagnostic::kNear};

std::string_view DiagnosticName(Diagnostic d);
// nullopt for anything outside the five names.
std::optional<Diagnostic> ParseDiagnostic(std::string_view name);

// Which ratio counts as the confidence score.
enum class CsMeasure { kOk, kOkPlusNear };
CsMeasure ParseCsMeasure(std::string_view name);
std::string_view CsMeasureName(CsMeasure m);

struct DiagnosticCounts {
  std::array<size_t, 5> counts{};

  void Add(Diagnostic d, size_t n = 1) {
    counts[static_cast<size_t>(d)] += n;
  }
  size_t operator[](Diagnostic d) const {
    return counts[static_cast<size_t>(d)];
  }
  size_t total() const;
};

// Confidence score of a method or cell: exact proportions of the five
// diagnostics over its judged sample.
struct MethodCS {
  std::string method;
  std::array<double, 5> ratios{};
  size_t sample_size = 0;

  double ratio(Diagnostic d) const { return ratios[static_cast<size_t>(d)]; }
  double ok() const { return ratio(Diagnostic::kOk); }
  double confidence(CsMeasure m) const;
};

// Throws std::invalid_argument on an empty sample.
MethodCS ComputeMethodCS(std::string method, const DiagnosticCounts &counts);

nlohmann::json MethodCSToJson(const MethodCS &cs);

// A recorded judgement on one link of a sample.
struct Verdict {
  std::string sample_id;
  std::string source_word;
  std::string synset;
  std::string method;
  Diagnostic diagnostic = Diagnostic::kOk;
  std::string annotator;
  std::string timestamp;  // ISO-8601 UTC

  bool operator==(const Verdict &) const = default;
};

}  // namespace lexiweave

#endif  // LEXIWEAVE_DIAGNOSTICS_H_
