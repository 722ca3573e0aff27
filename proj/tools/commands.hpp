// tools/commands.hpp

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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minkowski/dataio.hpp"
#include "minkowski/scoring.hpp"

namespace minkowski::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitIo = 3,
  kExitSolver = 4,
  kExitInternal = 70,
};

enum class OutputFormat { kTable, kMachine };

/// Throws ValidationError for odd orders with the reason they are unusable.
LossOrder parse_transform_order(int value);

struct TransformOptions {
  std::filesystem::path input;
  std::filesystem::path output;  // empty: stdout
  int order = 4;
  bool renormalize = true;
};
void cmd_transform(const TransformOptions& options, std::ostream& out);

/// Column 1 is mu on `grid_points` uniform points over [0, 1], then one
/// column per order with the transformed value.
std::string curves_table(const std::vector<int>& orders,
                         std::size_t grid_points);
std::string curves_svg(const std::vector<int>& orders, std::size_t grid_points);

struct CurvesOptions {
  std::vector<int> orders{2, 4, 6};
  std::size_t grid_points = 101;
  std::optional<std::filesystem::path> output;  // stdout when empty
  std::optional<std::filesystem::path> svg;
};
void cmd_curves(const CurvesOptions& options, std::ostream& out);

/// transform -> (renormalise) -> log scores -> Viterbi -> tokens.
TokenSequence decode_posteriors(const PosteriorMatrix& posteriors,
                                const HmmModel& hmm, LossOrder order,
                                bool renormalize,
                                const std::vector<double>& priors);

struct DecodeOptions {
  std::filesystem::path posteriors;
  std::filesystem::path hmm;
  int order = 4;
  bool renormalize = true;
  std::optional<std::filesystem::path> priors;
  std::optional<std::filesystem::path> output;  // stdout when empty
};
void cmd_decode(const DecodeOptions& options, std::ostream& out);

std::string format_wer(const WerReport& report, OutputFormat format);
WerReport cmd_score(const std::filesystem::path& reference,
                    const std::filesystem::path& hypothesis,
                    OutputFormat format, std::ostream& out);

struct SynthOptions {
  std::filesystem::path hmm;
  std::filesystem::path output_dir;
  CorpusOptions corpus;
};
CorpusManifest cmd_synth(const SynthOptions& options);

struct ExperimentConfig {
  /// As written in the config (echoed verbatim) and resolved against the
  /// config's directory.
  std::string hmm_label;
  std::filesystem::path hmm_path;
  std::optional<std::string> corpus_label;
  std::optional<std::filesystem::path> corpus_manifest;
  std::optional<std::filesystem::path> corpus_out;
  std::optional<std::string> priors_label;
  std::optional<std::filesystem::path> priors_path;
  CorpusOptions corpus;
  std::vector<int> orders{2, 4, 6};
  bool renormalize = true;
};

/// JSON document; relative paths are resolved against `base_dir`.
ExperimentConfig parse_experiment_config(
    const std::string& text, const std::string& source,
    const std::filesystem::path& base_dir);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct OrderResult {
  int order = 2;
  WerReport wer;
  double decode_seconds = 0.0;
  /// (wer_2 - wer_k) / wer_2; absent for the order-2 baseline.
  std::optional<double> relative_reduction;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t num_utterances = 0;
  std::vector<OrderResult> results;
};

ExperimentReport run_experiment(const ExperimentConfig& config);

/// Timing is nondeterministic and left out unless asked for.
std::string format_report(const ExperimentReport& report, OutputFormat format,
                          bool include_timing = false);

/// Full command line entry point. Maps exceptions to ExitCode values and
/// writes diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace minkowski::cli
