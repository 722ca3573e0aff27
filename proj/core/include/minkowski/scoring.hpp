// core/include/minkowski/scoring.hpp

// Copyright 2026  Minkowski decoding authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minkowski {

using TokenSequence = std::vector<std::string>;

struct WerReport {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t ref_length = 0;
  double wer = 0.0;

  std::size_t errors() const noexcept {
    return substitutions + deletions + insertions;
  }
  friend bool operator==(const WerReport&, const WerReport&) = default;
};

/// Unit-cost Levenshtein alignment of hypothesis against reference. When
/// several edits give the same cost the backtrace prefers substitution (or
/// match), then insertion, then deletion. Throws ValidationError on an empty
/// reference.
WerReport align_and_score(std::span<const std::string> reference,
                          std::span<const std::string> hypothesis);

/// Pooled counts over all pairs; wer = total errors / total reference words.
WerReport corpus_wer(
    std::span<const std::pair<TokenSequence, TokenSequence>> pairs);

/// (baseline - value) / baseline, or 0 when the baseline is 0.
double relative_reduction(double baseline, double value) noexcept;

}  // namespace minkowski
