// core/src/decoder.cpp

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

#include "minkowski/decoder.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "minkowski/error.hpp"

namespace minkowski {
namespace {

constexpr double kStochasticTolerance = 1e-6;

double safe_log(double p) { return p > 0.0 ? std::log(p) : kLogFloor; }

double linear_sum(std::span<const double> log_probs) {
  double sum = 0.0;
  for (double lp : log_probs) sum += lp <= kLogFloor ? 0.0 : std::exp(lp);
  return sum;
}

void check_scores(const LogScoreMatrix& scores, const HmmModel& hmm) {
  hmm.check_classes(scores.classes());
}

}  // namespace

HmmModel::HmmModel(std::vector<double> log_initial,
                   std::vector<double> log_transitions,
                   std::vector<std::string> state_labels,
                   std::vector<std::size_t> state_to_class)
    : log_initial_(std::move(log_initial)),
      log_transitions_(std::move(log_transitions)),
      state_labels_(std::move(state_labels)),
      state_to_class_(std::move(state_to_class)) {
  const std::size_t n = log_initial_.size();
  if (n == 0) throw ValidationError("HMM must have at least one state");
  if (log_transitions_.size() != n * n) {
    std::ostringstream msg;
    msg << "HMM transitions must be " << n << "x" << n << ", got "
        << log_transitions_.size() << " entries";
    throw ValidationError(msg.str());
  }
  if (state_labels_.size() != n) {
    throw ValidationError("HMM labels: expected " + std::to_string(n) +
                          " entries, got " +
                          std::to_string(state_labels_.size()));
  }
  if (state_to_class_.size() != n) {
    throw ValidationError("HMM state_to_class: expected " + std::to_string(n) +
                          " entries, got " +
                          std::to_string(state_to_class_.size()));
  }
  for (double& lp : log_initial_) {
    if (std::isnan(lp) || lp > 0.0) {
      throw ValidationError("HMM initial log-probabilities must be <= 0");
    }
    if (lp < kLogFloor) lp = kLogFloor;
  }
  for (double& lp : log_transitions_) {
    if (std::isnan(lp) || lp > 0.0) {
      throw ValidationError("HMM transition log-probabilities must be <= 0");
    }
    if (lp < kLogFloor) lp = kLogFloor;
  }

  const double init_sum = linear_sum(log_initial_);
  if (std::abs(init_sum - 1.0) > kStochasticTolerance) {
    std::ostringstream msg;
    msg << "HMM initial distribution sums to " << init_sum << ", not 1";
    throw ValidationError(msg.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double row_sum = linear_sum(
        std::span<const double>(log_transitions_.data() + i * n, n));
    if (std::abs(row_sum - 1.0) > kStochasticTolerance) {
      std::ostringstream msg;
      msg << "HMM transition row " << i << " sums to " << row_sum
          << ", not 1";
      throw ValidationError(msg.str());
    }
  }
}

HmmModel HmmModel::from_probabilities(std::span<const double> initial,
                                      std::span<const double> transitions,
                                      std::vector<std::string> state_labels,
                                      std::vector<std::size_t> state_to_class) {
  auto to_logs = [](std::span<const double> probs, const char* what) {
    std::vector<double> logs;
    logs.reserve(probs.size());
    for (double p : probs) {
      if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg << "HMM " << what << " probability " << p << " is outside [0, 1]";
        throw ValidationError(msg.str());
      }
      logs.push_back(safe_log(p));
    }
    return logs;
  };
  return HmmModel(to_logs(initial, "initial"),
                  to_logs(transitions, "transition"), std::move(state_labels),
                  std::move(state_to_class));
}

void HmmModel::check_classes(std::size_t num_classes) const {
  for (std::size_t s = 0; s < state_to_class_.size(); ++s) {
    if (state_to_class_[s] >= num_classes) {
      std::ostringstream msg;
      msg << "HMM state " << s << " maps to class " << state_to_class_[s]
          << " but the score matrix has only " << num_classes << " classes";
      throw ValidationError(msg.str());
    }
  }
}

double score_path(std::span<const std::size_t> path,
                  const LogScoreMatrix& scores, const HmmModel& hmm) {
  if (path.size() != scores.frames()) {
    throw ValidationError("score_path: path has " +
                          std::to_string(path.size()) + " states for " +
                          std::to_string(scores.frames()) + " frames");
  }
  check_scores(scores, hmm);
  for (std::size_t s : path) {
    if (s >= hmm.num_states()) {
      throw ValidationError("score_path: invalid state index " +
                            std::to_string(s));
    }
  }
  const auto& classes = hmm.state_to_class();
  double total = hmm.log_initial(path[0]) + scores(0, classes[path[0]]);
  for (std::size_t t = 1; t < path.size(); ++t) {
    total = (total + hmm.log_transition(path[t - 1], path[t])) +
            scores(t, classes[path[t]]);
  }
  return total;
}

std::vector<std::string> collapse_tokens(std::span<const std::size_t> path,
                                         const HmmModel& hmm) {
  std::vector<std::string> tokens;
  for (std::size_t s : path) {
    const std::string& label = hmm.state_labels().at(s);
    if (tokens.empty() || tokens.back() != label) tokens.push_back(label);
  }
  return tokens;
}

DecodingResult viterbi_decode(const LogScoreMatrix& scores,
                              const HmmModel& hmm) {
  check_scores(scores, hmm);
  const std::size_t frames = scores.frames();
  const std::size_t n = hmm.num_states();
  const auto& classes = hmm.state_to_class();

  std::vector<double> delta(n);
  std::vector<double> next(n);
  std::vector<std::size_t> backptr(frames * n, 0);

  for (std::size_t j = 0; j < n; ++j) {
    delta[j] = hmm.log_initial(j) + scores(0, classes[j]);
  }
  for (std::size_t t = 1; t < frames; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t best_i = 0;
      double best = delta[0] + hmm.log_transition(0, j);
      for (std::size_t i = 1; i < n; ++i) {
        const double candidate = delta[i] + hmm.log_transition(i, j);
        if (candidate > best) {
          best = candidate;
          best_i = i;
        }
      }
      next[j] = best + scores(t, classes[j]);
      backptr[t * n + j] = best_i;
    }
    delta.swap(next);
  }

  std::size_t state = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (delta[j] > delta[state]) state = j;
  }

  DecodingResult result;
  result.log_score = delta[state];
  result.state_path.assign(frames, 0);
  for (std::size_t t = frames; t-- > 0;) {
    result.state_path[t] = state;
    if (t > 0) state = backptr[t * n + state];
  }
  result.token_sequence = collapse_tokens(result.state_path, hmm);
  return result;
}

DecodingResult exhaustive_decode(const LogScoreMatrix& scores,
                                 const HmmModel& hmm, std::size_t max_paths) {
  check_scores(scores, hmm);
  const std::size_t frames = scores.frames();
  const std::size_t n = hmm.num_states();

  std::size_t total = 1;
  for (std::size_t t = 0; t < frames; ++t) {
    if (total > max_paths / n) {
      std::ostringstream msg;
      msg << "exhaustive_decode: " << n << "^" << frames
          << " paths exceeds the limit of " << max_paths;
      throw ValidationError(msg.str());
    }
    total *= n;
  }

  // Odometer with the last frame as the most significant digit, so paths
  // are visited in back-to-front lexicographic order and the first strict
  // maximum matches viterbi_decode's tie rule.
  StatePath path(frames, 0);
  StatePath best_path = path;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < total; ++k) {
    const double score = score_path(path, scores, hmm);
    if (score > best) {
      best = score;
      best_path = path;
    }
    for (std::size_t t = 0; t < frames; ++t) {
      if (++path[t] < n) break;
      path[t] = 0;
    }
  }

  DecodingResult result;
  result.state_path = std::move(best_path);
  result.log_score = best;
  result.token_sequence = collapse_tokens(result.state_path, hmm);
  return result;
}

}  // namespace minkowski
