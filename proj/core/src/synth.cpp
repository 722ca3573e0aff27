// core/src/synth.cpp

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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "minkowski/dataio.hpp"
#include "minkowski/error.hpp"

namespace minkowski {
namespace {

// mt19937_64 output is fixed by the standard; the std:: distributions are
// not, so the conversions below are spelled out.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n) {
    const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(k, n - 1);
  }

  /// Unit-mean exponential.
  double exponential() { return -std::log1p(-uniform()); }

  /// Index drawn from log-probabilities (kLogFloor entries never chosen).
  std::size_t categorical(std::span<const double> log_probs) {
    const double u = uniform();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < log_probs.size(); ++i) {
      if (log_probs[i] <= kLogFloor) continue;
      cumulative += std::exp(log_probs[i]);
      last_positive = i;
      if (u < cumulative) return i;
    }
    return last_positive;
  }

 private:
  std::mt19937_64 engine_;
};

std::string utterance_id(std::size_t index) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "utt%05zu", index);
  return buffer;
}

}  // namespace

void NoiseSpec::validate() const {
  if (!(concentration > 0.0)) {
    throw ValidationError("noise concentration must be positive");
  }
  if (!(confusion_rate >= 0.0 && confusion_rate <= 1.0)) {
    throw ValidationError("noise confusion_rate must lie in [0, 1]");
  }
}

void CorpusOptions::validate() const {
  noise.validate();
  if (num_utterances < 1) {
    throw ValidationError("corpus needs at least one utterance");
  }
  if (min_frames < 1 || max_frames < min_frames) {
    throw ValidationError("frame range must satisfy 1 <= min <= max");
  }
  if (num_classes == 1) {
    throw ValidationError("corpus needs at least two classes");
  }
}

std::vector<Utterance> generate_corpus(const HmmModel& hmm,
                                       const CorpusOptions& options) {
  options.validate();
  std::size_t classes = options.num_classes;
  const auto& state_to_class = hmm.state_to_class();
  const std::size_t needed =
      *std::max_element(state_to_class.begin(), state_to_class.end()) + 1;
  if (classes == 0) classes = std::max<std::size_t>(needed, 2);
  hmm.check_classes(classes);

  const std::size_t n = hmm.num_states();
  const auto& log_initial = hmm.log_initial();
  const auto& log_transitions = hmm.log_transitions();
  const bool one_hot = std::isinf(options.noise.concentration);

  std::vector<Utterance> corpus;
  corpus.reserve(options.num_utterances);
  for (std::size_t u = 0; u < options.num_utterances; ++u) {
    PortableRng rng(options.noise.seed + u);
    const std::size_t frames =
        options.min_frames +
        rng.below(options.max_frames - options.min_frames + 1);

    StatePath path(frames);
    path[0] = rng.categorical(log_initial);
    for (std::size_t t = 1; t < frames; ++t) {
      path[t] = rng.categorical(std::span<const double>(
          log_transitions.data() + path[t - 1] * n, n));
    }

    std::vector<double> values(frames * classes, 0.0);
    for (std::size_t t = 0; t < frames; ++t) {
      const std::size_t truth = state_to_class[path[t]];
      std::size_t centre = truth;
      if (rng.uniform() < options.noise.confusion_rate) {
        // Uniform over the classes - 1 wrong ones.
        centre = rng.below(classes - 1);
        if (centre >= truth) ++centre;
      }
      double* row = values.data() + t * classes;
      if (one_hot) {
        row[centre] = 1.0;
        continue;
      }
      double sum = 0.0;
      for (std::size_t c = 0; c < classes; ++c) {
        row[c] = rng.exponential();
        if (c == centre) row[c] += options.noise.concentration;
        sum += row[c];
      }
      for (std::size_t c = 0; c < classes; ++c) row[c] /= sum;
    }

    corpus.push_back(Utterance{utterance_id(u),
                               PosteriorMatrix(frames, classes, std::move(values)),
                               collapse_tokens(path, hmm)});
  }
  return corpus;
}

}  // namespace minkowski
