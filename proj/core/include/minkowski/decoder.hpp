// core/include/minkowski/decoder.hpp

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
#include <vector>

#include "minkowski/posterior_ops.hpp"

namespace minkowski {

/// Small HMM for decoding. Each state emits the score of one posterior
/// column (`state_to_class`) and carries an output token (`state_labels`).
/// Zero probabilities are stored as kLogFloor.
class HmmModel {
 public:
  /// From natural-log parameters. Throws ValidationError when sizes disagree
  /// or exp(initial) / exp(transition row) do not sum to 1 within 1e-6.
  HmmModel(std::vector<double> log_initial,
           std::vector<double> log_transitions,
           std::vector<std::string> state_labels,
           std::vector<std::size_t> state_to_class);

  /// From linear probabilities (the on-disk form). Same validation.
  static HmmModel from_probabilities(std::span<const double> initial,
                                     std::span<const double> transitions,
                                     std::vector<std::string> state_labels,
                                     std::vector<std::size_t> state_to_class);

  std::size_t num_states() const noexcept { return log_initial_.size(); }
  double log_initial(std::size_t s) const noexcept { return log_initial_[s]; }
  double log_transition(std::size_t from, std::size_t to) const noexcept {
    return log_transitions_[from * num_states() + to];
  }
  const std::vector<double>& log_initial() const noexcept {
    return log_initial_;
  }
  /// Row-major num_states x num_states.
  const std::vector<double>& log_transitions() const noexcept {
    return log_transitions_;
  }
  const std::vector<std::string>& state_labels() const noexcept {
    return state_labels_;
  }
  const std::vector<std::size_t>& state_to_class() const noexcept {
    return state_to_class_;
  }

  /// Throws ValidationError if any state maps to a column >= num_classes.
  void check_classes(std::size_t num_classes) const;

 private:
  std::vector<double> log_initial_;
  std::vector<double> log_transitions_;
  std::vector<std::string> state_labels_;
  std::vector<std::size_t> state_to_class_;
};

using StatePath = std::vector<std::size_t>;

struct DecodingResult {
  StatePath state_path;
  std::vector<std::string> token_sequence;
  double log_score = 0.0;
};

/// Exact max-product DP in the log domain. Ties go to the lower state index,
/// both for the final state and for every back-pointer, so among equally
/// scored paths the one that is smallest when read back to front wins.
DecodingResult viterbi_decode(const LogScoreMatrix& scores,
                              const HmmModel& hmm);

/// Scores every one of num_states^frames paths. Same tie rule as
/// viterbi_decode. Refuses instances above `max_paths`.
DecodingResult exhaustive_decode(const LogScoreMatrix& scores,
                                 const HmmModel& hmm,
                                 std::size_t max_paths = 10'000'000);

/// log_initial[s0] + e0 + sum_t (transition + emission), accumulated left to
/// right in the same order the decoders use.
double score_path(std::span<const std::size_t> path,
                  const LogScoreMatrix& scores, const HmmModel& hmm);

/// State labels along `path` with consecutive repeats merged.
std::vector<std::string> collapse_tokens(std::span<const std::size_t> path,
                                         const HmmModel& hmm);

}  // namespace minkowski
