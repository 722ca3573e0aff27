// core/include/minkowski/dataio.hpp

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

// Text formats and the synthetic corpus generator.
//
// Posterior matrix file:
//   line 1:     "<frames> <classes>"
//   lines 2..:  one frame per line, probabilities separated by single
//               spaces, written with 17 significant digits.
// Rows must sum to 1 within 1e-6 on load.
//
// HMM file (JSON):
//   {"num_states": N, "initial": [...], "transitions": [[...], ...],
//    "labels": ["..."], "state_to_class": [...]}
// Probabilities are linear on disk and converted to logs on load.
//
// Transcript file: one token per line.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "minkowski/decoder.hpp"
#include "minkowski/posterior_ops.hpp"
#include "minkowski/scoring.hpp"

namespace minkowski {

inline constexpr double kRowSumTolerance = 1e-6;

/// printf("%.17g"): shortest text that always round-trips a double.
std::string format_real(double value);

PosteriorMatrix read_posteriors(std::istream& in,
                                const std::string& source = "<stream>");
void write_posteriors(std::ostream& out, const PosteriorMatrix& matrix);
PosteriorMatrix load_posteriors(const std::filesystem::path& path);
void save_posteriors(const PosteriorMatrix& matrix,
                     const std::filesystem::path& path);

HmmModel parse_hmm(const std::string& text,
                   const std::string& source = "<string>");
std::string serialize_hmm(const HmmModel& hmm);
HmmModel load_hmm(const std::filesystem::path& path);
void save_hmm(const HmmModel& hmm, const std::filesystem::path& path);

/// Tokens separated by any whitespace; blank lines are ignored.
TokenSequence load_tokens(const std::filesystem::path& path);
void save_tokens(const TokenSequence& tokens,
                 const std::filesystem::path& path);

/// Whitespace-separated positive class priors.
std::vector<double> load_priors(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);

/// Simulated acoustic-model noise. Each frame's posterior puts
/// `concentration` extra mass on its centre class on top of unit-mean
/// exponential noise over all classes; with probability `confusion_rate`
/// the centre is a uniformly chosen wrong class. An infinite concentration
/// gives exact one-hot rows.
struct NoiseSpec {
  double concentration = 5.0;
  double confusion_rate = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct CorpusOptions {
  std::size_t num_utterances = 1;
  std::size_t min_frames = 1;
  std::size_t max_frames = 1;
  /// Posterior columns; 0 means max(state_to_class) + 1 (at least 2).
  std::size_t num_classes = 0;
  NoiseSpec noise;

  void validate() const;
};

struct Utterance {
  std::string id;
  PosteriorMatrix posteriors;
  TokenSequence reference;
};

struct ManifestEntry {
  std::string id;
  std::filesystem::path posteriors;
  std::filesystem::path reference;
};

struct CorpusManifest {
  std::vector<ManifestEntry> utterances;
  /// Set for generated corpora.
  std::optional<CorpusOptions> generator;
};

/// Samples state paths from the HMM and turns them into noisy posteriors
/// plus reference transcripts. Utterance k draws from an mt19937_64 seeded
/// with noise.seed + k, so output depends only on the arguments.
std::vector<Utterance> generate_corpus(const HmmModel& hmm,
                                       const CorpusOptions& options);

/// Writes `<id>.post`, `<id>.ref` and `manifest.json` into `dir`.
CorpusManifest write_corpus(const std::vector<Utterance>& corpus,
                            const std::filesystem::path& dir,
                            const std::optional<CorpusOptions>& generator);

/// Entry paths are resolved against the manifest's directory. Throws if ids
/// repeat or a referenced file does not exist.
CorpusManifest load_manifest(const std::filesystem::path& manifest_path);
std::vector<Utterance> load_corpus(const CorpusManifest& manifest);

}  // namespace minkowski
