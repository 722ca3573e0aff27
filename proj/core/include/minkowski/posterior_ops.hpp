// core/include/minkowski/posterior_ops.hpp

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
#include <vector>

#include "minkowski/loss.hpp"

namespace minkowski {

/// Stand-in for ln(0). Finite so that DP sums stay totally ordered.
inline constexpr double kLogFloor = -1e30;

/// Frames x classes matrix of probabilities, row-major.
///
/// Construction checks shape (frames >= 1, classes >= 2) and that every
/// entry lies in [0, 1]. Row sums are checked where a matrix enters the
/// system (file load, renormalize_rows); a transformed matrix with
/// renormalisation disabled is still a PosteriorMatrix but its rows need not
/// sum to one.
class PosteriorMatrix {
 public:
  PosteriorMatrix(std::size_t frames, std::size_t classes,
                  std::vector<double> values);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t classes() const noexcept { return classes_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double operator()(std::size_t frame, std::size_t cls) const noexcept {
    return values_[frame * classes_ + cls];
  }
  std::span<const double> row(std::size_t frame) const noexcept {
    return {values_.data() + frame * classes_, classes_};
  }

  /// Largest |sum(row) - 1| over all rows.
  double max_row_sum_error() const noexcept;

  friend bool operator==(const PosteriorMatrix&,
                         const PosteriorMatrix&) = default;

 private:
  std::size_t frames_;
  std::size_t classes_;
  std::vector<double> values_;
};

/// Natural-log emission scores, same layout as PosteriorMatrix.
class LogScoreMatrix {
 public:
  LogScoreMatrix(std::size_t frames, std::size_t classes,
                 std::vector<double> values);

  std::size_t frames() const noexcept { return frames_; }
  std::size_t classes() const noexcept { return classes_; }
  const std::vector<double>& values() const noexcept { return values_; }

  double operator()(std::size_t frame, std::size_t cls) const noexcept {
    return values_[frame * classes_ + cls];
  }
  double& operator()(std::size_t frame, std::size_t cls) noexcept {
    return values_[frame * classes_ + cls];
  }
  std::span<const double> row(std::size_t frame) const noexcept {
    return {values_.data() + frame * classes_, classes_};
  }

 private:
  std::size_t frames_;
  std::size_t classes_;
  std::vector<double> values_;
};

/// Maps every entry through closed_form_transform, then optionally rescales
/// each row to sum to one. Order 2 is the identity and returns a copy of `p`
/// untouched, whatever `renormalize` says.
PosteriorMatrix transform_matrix(const PosteriorMatrix& p, LossOrder order,
                                 bool renormalize = true);

/// Divides every row of a nonnegative frames x classes matrix by its sum.
/// Throws ValidationError on negative / non-finite entries or a row with
/// zero sum.
PosteriorMatrix renormalize_rows(std::size_t frames, std::size_t classes,
                                 std::span<const double> raw);
PosteriorMatrix renormalize_rows(const PosteriorMatrix& p);

/// ln(p), or ln(p) - ln(prior) when `priors` is non-empty. Zero
/// probabilities map to kLogFloor.
LogScoreMatrix to_log_scores(const PosteriorMatrix& p,
                             std::span<const double> priors = {});

}  // namespace minkowski
