// tests/acceptance.cpp

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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "minkowski/dataio.hpp"
#include "minkowski/decoder.hpp"
#include "minkowski/loss.hpp"
#include "minkowski/posterior_ops.hpp"
#include "minkowski/scoring.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

namespace {

using namespace minkowski;
using Clock = std::chrono::steady_clock;

// Thresholds.
constexpr double kClosedVsNewton = 1e-9;
constexpr double kVsGrid = 1e-5;
constexpr std::int64_t kGridSteps = 1'000'000;
constexpr int kMuPoints = 1001;
constexpr double kStationarity = 1e-10;
constexpr double kQuadraticTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kScoreTolerance = 1e-9;
constexpr double kTripleOracleSeconds = 60.0;
constexpr double kDecoderOracleSeconds = 30.0;
constexpr int kDecoderInstances = 250;
constexpr int kRandomMatrices = 120;
constexpr int kWerPairs = 600;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Sweep {
  // [order index][mu index]
  std::vector<std::vector<double>> closed, newton;
};

Sweep g_sweep;

Outcome triple_oracle() {
  Outcome out;
  const auto start = Clock::now();
  double worst_cn = 0.0;
  double worst_grid = 0.0;
  for (int q : {4, 6}) {
    const LossOrder order = LossOrder::even(q);
    std::vector<double> closed, newton;
    for (int i = 0; i < kMuPoints; ++i) {
      const Posterior mu(static_cast<double>(i) / (kMuPoints - 1));
      const double c = closed_form_transform(mu, order).value();
      const double n = newton_transform(mu, order).value();
      const double g = brute_force_transform(mu, order, kGridSteps).value();
      worst_cn = std::max(worst_cn, std::abs(c - n));
      worst_grid = std::max({worst_grid, std::abs(c - g), std::abs(n - g)});
      closed.push_back(c);
      newton.push_back(n);
    }
    g_sweep.closed.push_back(std::move(closed));
    g_sweep.newton.push_back(std::move(newton));
  }
  const double elapsed = seconds_since(start);
  if (worst_cn > kClosedVsNewton) out.fail("closed vs newton " + fmt(worst_cn));
  if (worst_grid > kVsGrid) out.fail("vs grid " + fmt(worst_grid));
  if (elapsed >= kTripleOracleSeconds) out.fail("took " + fmt(elapsed) + " s");
  if (out.pass) {
    out.detail = "max |closed-newton| " + fmt(worst_cn) + ", max |.-grid| " +
                 fmt(worst_grid) + ", " + fmt(elapsed) + " s";
  }
  return out;
}

Outcome stationarity() {
  Outcome out;
  double worst = 0.0;
  const int orders[] = {4, 6};
  for (std::size_t k = 0; k < 2; ++k) {
    const LossOrder order = LossOrder::even(orders[k]);
    for (int i = 0; i < kMuPoints; ++i) {
      const Posterior mu(static_cast<double>(i) / (kMuPoints - 1));
      const GradientPolynomial poly = gradient_coefficients(mu, order);
      worst = std::max({worst, std::abs(poly(g_sweep.closed[k][i])),
                        std::abs(poly(g_sweep.newton[k][i]))});
    }
  }
  if (worst >= kStationarity) out.fail("max |p(root)| " + fmt(worst));
  else out.detail = "max |p(root)| " + fmt(worst);
  return out;
}

Outcome gradient_coefficient_check() {
  Outcome out;
  for (double m : {0.2, 0.5, 0.9}) {
    const Posterior mu(m);
    const std::vector<double> quartic{1.0, -3.0 * m, 3.0 * m, -m};
    const std::vector<double> sextic{1.0,      -5.0 * m, 10.0 * m,
                                     -10.0 * m, 5.0 * m,  -m};
    if (gradient_coefficients(mu, LossOrder::even(4)).coefficients() != quartic) {
      out.fail("order 4 mismatch at mu=" + fmt(m));
    }
    if (gradient_coefficients(mu, LossOrder::even(6)).coefficients() != sextic) {
      out.fail("order 6 mismatch at mu=" + fmt(m));
    }
  }
  if (out.pass) out.detail = "exact for mu in {0.2, 0.5, 0.9}";
  return out;
}

Outcome odd_order_rejection() {
  Outcome out;
  double worst = 0.0;
  for (int k = 1; k <= 99; ++k) {
    const Posterior mu(k / 100.0);
    for (int q : {3, 5}) {
      const RootAnalysis a = analyze_odd_order(mu, LossOrder::for_analysis(q));
      if (a.has_valid_probability_root) {
        out.fail("order " + std::to_string(q) + " has a real root at mu=" +
                 fmt(mu.value()));
      }
      for (const auto& root : a.roots) {
        if (std::abs(root.imag()) <= 1e-9 && root.real() >= 0.0 &&
            root.real() <= 1.0) {
          out.fail("real root in [0,1] at mu=" + fmt(mu.value()));
        }
      }
      if (q == 3) {
        auto [r1, r2] = minkowski::testing::quadratic_roots(mu.value());
        auto got = a.roots;
        std::sort(got.begin(), got.end(), [](auto x, auto y) {
          return x.imag() < y.imag();
        });
        if (r1.imag() > r2.imag()) std::swap(r1, r2);
        worst = std::max({worst, std::abs(got[0] - r1), std::abs(got[1] - r2)});
      }
    }
  }
  if (worst > kQuadraticTolerance) out.fail("quadratic mismatch " + fmt(worst));
  if (out.pass) {
    out.detail = "no root in [0,1] for 99 mu x {3,5}; quadratic error " + fmt(worst);
  }
  return out;
}

Outcome curve_shape() {
  Outcome out;
  const std::size_t grid = 1001;
  std::vector<std::string> args{"mink", "curves", "--order", "4,6",
                                "--grid-points", std::to_string(grid)};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream table, err;
  if (cli::run(static_cast<int>(argv.size()), argv.data(), table, err) != 0) {
    out.fail("curves failed: " + err.str());
    return out;
  }

  std::istringstream in(table.str());
  std::string line;
  std::getline(in, line);
  std::vector<double> mu;
  std::vector<std::vector<double>> cols(2);
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    double m, a, b;
    fields >> m >> a >> b;
    mu.push_back(m);
    cols[0].push_back(a);
    cols[1].push_back(b);
  }
  if (mu.size() != grid) {
    out.fail("expected " + std::to_string(grid) + " rows");
    return out;
  }
  for (const auto& y : cols) {
    if (y.front() != 0.0 || y.back() != 1.0 || y[grid / 2] != 0.5) {
      out.fail("fixed points 0, 0.5, 1 not reproduced");
    }
    double worst_sym = 0.0;
    double first_slope = 0.0;
    double max_interior = 0.0;
    double max_any = 0.0;
    for (std::size_t i = 0; i + 1 < grid; ++i) {
      if (!(y[i + 1] > y[i])) out.fail("not strictly monotone at row " + std::to_string(i));
      const double slope = (y[i + 1] - y[i]) / (mu[i + 1] - mu[i]);
      if (i == 0) first_slope = slope;
      else if (i + 2 < grid) max_interior = std::max(max_interior, slope);
      max_any = std::max(max_any, slope);
    }
    for (std::size_t i = 0; i < grid; ++i) {
      worst_sym = std::max(worst_sym, std::abs(y[grid - 1 - i] - (1.0 - y[i])));
    }
    if (worst_sym > kSymmetryTolerance) out.fail("symmetry error " + fmt(worst_sym));
    // The mirrored last cell has the same slope; the first cell must attain
    // the maximum and beat every interior cell.
    if (!(first_slope > max_interior) ||
        first_slope < max_any * (1.0 - 1e-9)) {
      out.fail("steepest cell is not adjacent to mu=0");
    }
  }
  if (out.pass) out.detail = "monotone, fixed points, symmetric, steepest at mu=0";
  return out;
}

Outcome decoder_oracle() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> states_dist(2, 5);
  std::uniform_int_distribution<std::size_t> frames_dist(1, 8);
  double worst = 0.0;
  for (int trial = 0; trial < kDecoderInstances; ++trial) {
    const std::size_t states = states_dist(rng);
    const std::size_t frames = frames_dist(rng);
    const std::size_t classes = 2 + trial % 4;
    const HmmModel hmm = minkowski::testing::random_hmm(rng, states, classes);
    const LogScoreMatrix scores =
        to_log_scores(minkowski::testing::random_posteriors(rng, frames, classes));
    const DecodingResult fast = viterbi_decode(scores, hmm);
    const DecodingResult slow = exhaustive_decode(scores, hmm);
    if (fast.state_path != slow.state_path) {
      out.fail("path mismatch on instance " + std::to_string(trial));
    }
    worst = std::max({worst, std::abs(fast.log_score - slow.log_score),
                      std::abs(score_path(fast.state_path, scores, hmm) -
                               fast.log_score)});
  }
  const double elapsed = seconds_since(start);
  if (worst > kScoreTolerance) out.fail("score mismatch " + fmt(worst));
  if (elapsed >= kDecoderOracleSeconds) out.fail("took " + fmt(elapsed) + " s");
  if (out.pass) {
    out.detail = std::to_string(kDecoderInstances) + " instances, max score gap " +
                 fmt(worst) + ", " + fmt(elapsed) + " s";
  }
  return out;
}

std::vector<std::size_t> ranking(std::span<const double> row) {
  std::vector<std::size_t> idx(row.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return row[a] > row[b]; });
  return idx;
}

Outcome argmax_rank_invariance() {
  Outcome out;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < kRandomMatrices; ++trial) {
    const std::size_t classes = 2 + trial % 7;
    const PosteriorMatrix p = minkowski::testing::random_posteriors(
        rng, 8, classes, trial % 3 == 0 ? 4.0 : 1.0);
    for (int q : {4, 6}) {
      const PosteriorMatrix t = transform_matrix(p, LossOrder::even(q), true);
      for (std::size_t f = 0; f < p.frames(); ++f) {
        if (ranking(p.row(f)) != ranking(t.row(f))) {
          out.fail("ranking changed, matrix " + std::to_string(trial));
        }
      }
    }
    const HmmModel uniform = minkowski::testing::uniform_hmm(classes);
    const auto base =
        viterbi_decode(to_log_scores(p), uniform).state_path;
    for (int q : {4, 6}) {
      const auto path = viterbi_decode(
          to_log_scores(transform_matrix(p, LossOrder::even(q), true)), uniform)
                            .state_path;
      if (path != base) out.fail("uniform-HMM path changed at order " + std::to_string(q));
    }
  }
  if (out.pass) out.detail = std::to_string(kRandomMatrices) + " matrices, orders 4/6";
  return out;
}

Outcome renormalization_neutrality() {
  Outcome out;
  std::mt19937_64 rng(23);
  std::size_t compared = 0;
  for (int trial = 0; trial < kDecoderInstances; ++trial) {
    const std::size_t classes = 2 + trial % 4;
    const HmmModel hmm = minkowski::testing::random_hmm(rng, 2 + trial % 4, classes);
    const PosteriorMatrix p =
        minkowski::testing::random_posteriors(rng, 1 + trial % 12, classes);
    for (int q : {2, 4, 6}) {
      const LossOrder order = LossOrder::even(q);
      const auto on = viterbi_decode(to_log_scores(transform_matrix(p, order, true)), hmm);
      const auto off = viterbi_decode(to_log_scores(transform_matrix(p, order, false)), hmm);
      ++compared;
      if (on.state_path != off.state_path) {
        out.fail("instance " + std::to_string(trial) + " order " + std::to_string(q));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(compared) + " decodes identical";
  return out;
}

Outcome wer_oracle() {
  Outcome out;
  std::mt19937_64 rng(29);
  std::vector<std::pair<TokenSequence, TokenSequence>> pairs;
  WerReport summed;
  for (int trial = 0; trial < kWerPairs; ++trial) {
    TokenSequence ref = minkowski::testing::random_tokens(rng, 50, 8);
    if (ref.empty()) ref.push_back("w0");
    TokenSequence hyp = minkowski::testing::random_tokens(rng, 50, 8);
    const WerReport r = align_and_score(ref, hyp);
    if (r.errors() != minkowski::testing::levenshtein(ref, hyp)) {
      out.fail("distance mismatch on pair " + std::to_string(trial));
    }
    summed.substitutions += r.substitutions;
    summed.deletions += r.deletions;
    summed.insertions += r.insertions;
    summed.ref_length += r.ref_length;
    pairs.emplace_back(std::move(ref), std::move(hyp));
  }
  const WerReport pooled = corpus_wer(pairs);
  if (pooled.substitutions != summed.substitutions ||
      pooled.deletions != summed.deletions ||
      pooled.insertions != summed.insertions ||
      pooled.ref_length != summed.ref_length) {
    out.fail("pooled counts differ from summed counts");
  }
  if (out.pass) out.detail = std::to_string(kWerPairs) + " pairs, pooled WER " + fmt(pooled.wer);
  return out;
}

// Machine-readable report for the pinned noisy configuration below, frozen
// from a reference run. Any change in the generator, transform, decoder or
// formatting shows up here.
const char* kPinnedNoisyReport = R"({
  "config": {
    "hmm": "hmm.json",
    "corpus": null,
    "priors": null,
    "num_utterances": 40,
    "min_frames": 10,
    "max_frames": 40,
    "concentration": 1.5,
    "confusion_rate": 0.25,
    "seed": 2026,
    "renormalize": true,
    "orders": [2, 4, 6]
  },
  "results": [
    {"order": 2, "substitutions": 8, "deletions": 121, "insertions": 6, "ref_length": 284, "wer": 0.47535211267605632, "relative_reduction": null},
    {"order": 4, "substitutions": 3, "deletions": 222, "insertions": 0, "ref_length": 284, "wer": 0.79225352112676062, "relative_reduction": -0.66666666666666685},
    {"order": 6, "substitutions": 1, "deletions": 242, "insertions": 0, "ref_length": 284, "wer": 0.85563380281690138, "relative_reduction": -0.80000000000000004}
  ]
}
)";

Outcome end_to_end_determinism() {
  Outcome out;
  minkowski::testing::TempDir dir;
  write_text_file(dir.path() / "hmm.json", R"({
  "num_states": 3,
  "initial": [0.5, 0.3, 0.2],
  "transitions": [[0.8, 0.15, 0.05], [0.1, 0.7, 0.2], [0.25, 0.05, 0.7]],
  "labels": ["a", "b", "c"],
  "state_to_class": [0, 1, 2]
})");
  write_text_file(dir.path() / "noisy.json", R"({"hmm": "hmm.json",
  "num_utterances": 40, "min_frames": 10, "max_frames": 40,
  "noise": {"concentration": 1.5, "confusion_rate": 0.25, "seed": 2026}})");
  write_text_file(dir.path() / "clean.json", R"({"hmm": "hmm.json",
  "num_utterances": 40, "min_frames": 10, "max_frames": 40,
  "noise": {"concentration": "inf", "confusion_rate": 0.0, "seed": 2026}})");

  auto run_experiment_cli = [&](const std::string& config) {
    const std::string path = (dir.path() / config).string();
    const char* argv[] = {"mink", "experiment", path.c_str(), "--format",
                          "machine"};
    std::ostringstream report, err;
    const int code = cli::run(5, argv, report, err);
    if (code != 0) out.fail(config + " exited " + std::to_string(code) + ": " + err.str());
    return report.str();
  };

  const std::string first = run_experiment_cli("noisy.json");
  const std::string second = run_experiment_cli("noisy.json");
  if (first != second) out.fail("noisy report differs between runs");
  if (first != kPinnedNoisyReport) {
    out.fail("noisy report differs from the pinned reference");
  }
  if (std::getenv("MINKOWSKI_PRINT_REPORT")) std::cerr << first;

  const cli::ExperimentReport clean =
      cli::run_experiment(cli::load_experiment_config(dir.path() / "clean.json"));
  for (const auto& result : clean.results) {
    if (result.wer.wer != 0.0) {
      out.fail("noiseless WER at order " + std::to_string(result.order) + " is " +
               fmt(result.wer.wer));
    }
  }
  if (clean.results.size() != 3) out.fail("expected orders 2, 4, 6");
  if (out.pass) out.detail = "byte-identical reruns, matches pinned report, noiseless WER 0";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"AC1 triple-oracle agreement", triple_oracle},
      {"AC2 stationarity", stationarity},
      {"AC3 gradient coefficients", gradient_coefficient_check},
      {"AC4 odd-order rejection", odd_order_rejection},
      {"AC5 transform curve shape", curve_shape},
      {"AC6 decoder oracle", decoder_oracle},
      {"AC7 argmax/rank invariance", argmax_rank_invariance},
      {"AC8 renormalization neutrality", renormalization_neutrality},
      {"AC9 WER oracle", wer_oracle},
      {"AC10 end-to-end determinism", end_to_end_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Outcome outcome;
    try {
      outcome = criterion.check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << criterion.name
              << " -- " << outcome.detail << std::endl;
    if (!outcome.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
