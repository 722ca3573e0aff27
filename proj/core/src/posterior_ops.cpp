// core/src/posterior_ops.cpp

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

#include "minkowski/posterior_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "minkowski/error.hpp"

namespace minkowski {
namespace {

void check_shape(std::size_t frames, std::size_t classes, std::size_t size,
                 std::size_t min_classes) {
  if (frames < 1) throw ValidationError("matrix must have at least one frame");
  if (classes < min_classes) {
    throw ValidationError("matrix must have at least " +
                          std::to_string(min_classes) + " classes");
  }
  if (size != frames * classes) {
    std::ostringstream msg;
    msg << "matrix of shape " << frames << "x" << classes << " needs "
        << frames * classes << " values, got " << size;
    throw ValidationError(msg.str());
  }
}

}  // namespace

PosteriorMatrix::PosteriorMatrix(std::size_t frames, std::size_t classes,
                                 std::vector<double> values)
    : frames_(frames), classes_(classes), values_(std::move(values)) {
  check_shape(frames_, classes_, values_.size(), 2);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      std::ostringstream msg;
      msg << "posterior entry (" << i / classes_ << ", " << i % classes_
          << ") = " << v << " is outside [0, 1]";
      throw ValidationError(msg.str());
    }
  }
}

double PosteriorMatrix::max_row_sum_error() const noexcept {
  double worst = 0.0;
  for (std::size_t t = 0; t < frames_; ++t) {
    double sum = 0.0;
    for (double v : row(t)) sum += v;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

LogScoreMatrix::LogScoreMatrix(std::size_t frames, std::size_t classes,
                               std::vector<double> values)
    : frames_(frames), classes_(classes), values_(std::move(values)) {
  check_shape(frames_, classes_, values_.size(), 1);
}

PosteriorMatrix transform_matrix(const PosteriorMatrix& p, LossOrder order,
                                 bool renormalize) {
  if (!order.is_even()) {
    throw ValidationError("transform_matrix: order " +
                          std::to_string(order.value()) +
                          " is odd; its optimal prediction is complex-valued"
                          " and can't be used as a probability");
  }
  if (order.value() == 2) return p;

  std::vector<double> out(p.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = closed_form_transform(Posterior(p.values()[i]), order).value();
  }
  if (renormalize) return renormalize_rows(p.frames(), p.classes(), out);
  return PosteriorMatrix(p.frames(), p.classes(), std::move(out));
}

PosteriorMatrix renormalize_rows(std::size_t frames, std::size_t classes,
                                 std::span<const double> raw) {
  check_shape(frames, classes, raw.size(), 2);
  std::vector<double> out(raw.begin(), raw.end());
  for (std::size_t t = 0; t < frames; ++t) {
    double sum = 0.0;
    for (std::size_t c = 0; c < classes; ++c) {
      const double v = out[t * classes + c];
      if (!(v >= 0.0) || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << "renormalize_rows: entry (" << t << ", " << c << ") = " << v
            << " is not a finite nonnegative number";
        throw ValidationError(msg.str());
      }
      sum += v;
    }
    if (!(sum > 0.0)) {
      throw ValidationError("renormalize_rows: row " + std::to_string(t) +
                            " sums to zero");
    }
    for (std::size_t c = 0; c < classes; ++c) out[t * classes + c] /= sum;
  }
  return PosteriorMatrix(frames, classes, std::move(out));
}

PosteriorMatrix renormalize_rows(const PosteriorMatrix& p) {
  return renormalize_rows(p.frames(), p.classes(), p.values());
}

LogScoreMatrix to_log_scores(const PosteriorMatrix& p,
                             std::span<const double> priors) {
  if (!priors.empty()) {
    if (priors.size() != p.classes()) {
      std::ostringstream msg;
      msg << "to_log_scores: " << priors.size() << " priors given for "
          << p.classes() << " classes";
      throw ValidationError(msg.str());
    }
    for (double prior : priors) {
      if (!(prior > 0.0) || !std::isfinite(prior)) {
        throw ValidationError("to_log_scores: priors must be positive");
      }
    }
  }

  std::vector<double> out(p.values().size());
  for (std::size_t t = 0; t < p.frames(); ++t) {
    for (std::size_t c = 0; c < p.classes(); ++c) {
      const double v = p(t, c);
      double score = v > 0.0 ? std::log(v) : kLogFloor;
      if (v > 0.0 && !priors.empty()) score -= std::log(priors[c]);
      out[t * p.classes() + c] = score;
    }
  }
  return LogScoreMatrix(p.frames(), p.classes(), std::move(out));
}

}  // namespace minkowski
