// core/include/minkowski/loss.hpp

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

// Expected Minkowski loss for per-class binary targets and the optimal
// prediction it induces.
//
// For a class with posterior mu, the target t is 1 with probability mu and 0
// otherwise, so the expected order-q loss of a prediction y is
//
//   E[L](y) = (1 - mu) * y^q + mu * (1 - y)^q.
//
// For even q the minimiser is the single real root of the derivative
// (1 - mu) * y^(q-1) + mu * (y - 1)^(q-1), which lies in [0, 1]. Order 2 gives
// y = mu back; higher orders pull mu toward 1/2.

#include <complex>
#include <cstdint>
#include <vector>

namespace minkowski {

/// Minkowski exponent. Usable transform orders are even and >= 2; odd orders
/// exist only so the root analysis can explain why they are unusable.
class LossOrder {
 public:
  /// Throws ValidationError unless `value` is even and >= 2.
  static LossOrder even(int value);
  /// Any order >= 2, including odd ones. Only analyze_odd_order accepts the
  /// odd results.
  static LossOrder for_analysis(int value);

  int value() const noexcept { return value_; }
  bool is_even() const noexcept { return value_ % 2 == 0; }

  friend bool operator==(LossOrder, LossOrder) = default;

 private:
  explicit LossOrder(int value) : value_(value) {}
  int value_;
};

/// Probability in [0, 1]. Rejects NaN and out-of-range values.
class Posterior {
 public:
  explicit Posterior(double value);

  double value() const noexcept { return value_; }

  friend bool operator==(Posterior, Posterior) = default;

 private:
  double value_;
};

/// Derivative of the expected loss with respect to y, constant factor
/// dropped. Coefficients are stored highest degree first.
class GradientPolynomial {
 public:
  GradientPolynomial(LossOrder order, Posterior mu,
                     std::vector<double> coefficients);

  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  LossOrder order() const noexcept { return order_; }
  Posterior mu() const noexcept { return mu_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Horner evaluation.
  double operator()(double y) const noexcept;
  double derivative(double y) const noexcept;

 private:
  LossOrder order_;
  Posterior mu_;
  std::vector<double> coeffs_;
};

struct SolverConfig {
  double tolerance = 1e-12;
  int max_iterations = 100;

  /// Throws ValidationError on a non-positive tolerance or iteration cap.
  void validate() const;
};

struct RootAnalysis {
  std::vector<std::complex<double>> roots;
  bool has_valid_probability_root = false;
};

/// (1 - mu) * y^q + mu * (1 - y)^q. Throws ValidationError if y is outside
/// [0, 1] or NaN.
double expected_loss(double y, Posterior mu, LossOrder order);

/// Expansion of (1 - mu) * y^n + mu * (y - 1)^n with n = order - 1:
/// [1, -C(n,1) mu, +C(n,2) mu, ..., -mu]. Even orders only.
GradientPolynomial gradient_coefficients(Posterior mu, LossOrder order);

/// Closed-form root. The gradient vanishes where (1 - mu) y^n = mu (1 - y)^n,
/// i.e. y / (1 - y) = (mu / (1 - mu))^(1/n). Returns mu unchanged at order 2
/// and exactly 0 / 1 at the endpoints.
Posterior closed_form_transform(Posterior mu, LossOrder order);

/// Newton iteration on the gradient polynomial, started at mu and kept inside
/// a shrinking bracket on [0, 1]; any step that would leave the bracket is
/// replaced by bisection. Stops once both |p(y)| and the last step are below
/// `config.tolerance`. Throws SolverError if `config.max_iterations` is hit.
Posterior newton_transform(Posterior mu, LossOrder order,
                           const SolverConfig& config = {});

/// Reference minimiser: evaluates expected_loss on `grid_steps + 1` uniform
/// points, then golden-section search over the two cells around the best
/// point. Does not use the gradient polynomial. `grid_steps` must be >= 100.
Posterior brute_force_transform(Posterior mu, LossOrder order,
                                std::int64_t grid_steps);

/// All complex roots of the odd-order gradient polynomial
/// (1 - mu) y^n + mu (y - 1)^n, n = order - 1 (even). Quadratics are solved
/// directly, higher degrees through companion-matrix eigenvalues. A root is
/// a usable probability when |imag| <= imag_tolerance and its real part lies
/// in [0, 1] (same tolerance).
RootAnalysis analyze_odd_order(Posterior mu, LossOrder order,
                               double imag_tolerance = 1e-9);

/// Coefficients of the odd-order gradient polynomial, highest degree first.
std::vector<double> odd_order_gradient_coefficients(Posterior mu,
                                                    LossOrder order);

}  // namespace minkowski
