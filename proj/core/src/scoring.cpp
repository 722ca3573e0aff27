// core/src/scoring.cpp

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

#include "minkowski/scoring.hpp"

#include <algorithm>

#include "minkowski/error.hpp"

namespace minkowski {

WerReport align_and_score(std::span<const std::string> reference,
                          std::span<const std::string> hypothesis) {
  if (reference.empty()) {
    throw ValidationError("align_and_score: reference is empty");
  }
  const std::size_t rows = reference.size() + 1;
  const std::size_t cols = hypothesis.size() + 1;
  // cost[i][j]: edits turning reference[0, i) into hypothesis[0, j).
  std::vector<std::size_t> cost(rows * cols);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return cost[i * cols + j];
  };
  for (std::size_t i = 0; i < rows; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j < cols; ++j) at(0, j) = j;
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      const std::size_t diag =
          at(i - 1, j - 1) + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i, j - 1) + 1, at(i - 1, j) + 1});
    }
  }

  WerReport report;
  report.ref_length = reference.size();
  std::size_t i = rows - 1;
  std::size_t j = cols - 1;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool same = reference[i - 1] == hypothesis[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (same ? 0 : 1)) {
        if (!same) ++report.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (j > 0 && at(i, j) == at(i, j - 1) + 1) {
      ++report.insertions;
      --j;
    } else {
      ++report.deletions;
      --i;
    }
  }
  report.wer = static_cast<double>(report.errors()) /
               static_cast<double>(report.ref_length);
  return report;
}

WerReport corpus_wer(
    std::span<const std::pair<TokenSequence, TokenSequence>> pairs) {
  if (pairs.empty()) throw ValidationError("corpus_wer: no utterances");
  WerReport pooled;
  for (const auto& [reference, hypothesis] : pairs) {
    const WerReport one = align_and_score(reference, hypothesis);
    pooled.substitutions += one.substitutions;
    pooled.deletions += one.deletions;
    pooled.insertions += one.insertions;
    pooled.ref_length += one.ref_length;
  }
  pooled.wer = static_cast<double>(pooled.errors()) /
               static_cast<double>(pooled.ref_length);
  return pooled;
}

double relative_reduction(double baseline, double value) noexcept {
  if (baseline == 0.0) return 0.0;
  return (baseline - value) / baseline;
}

}  // namespace minkowski
