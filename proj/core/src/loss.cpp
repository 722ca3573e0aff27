// core/src/loss.cpp

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

#include "minkowski/loss.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "minkowski/error.hpp"

namespace minkowski {
namespace {

double ipow(double base, int exponent) noexcept {
  double result = 1.0;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::vector<double> binomial_row(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k < n; ++k) {
    row[k] = row[k - 1] * static_cast<double>(n - k + 1) / k;
  }
  return row;
}

// Expansion of (1 - mu) y^n + mu (y - 1)^n for any n >= 1. The y^n terms
// combine to a unit leading coefficient; every lower term is (-1)^k C(n,k) mu.
std::vector<double> expand_gradient(double mu, int n) {
  std::vector<double> binom = binomial_row(n);
  std::vector<double> coeffs(binom.size());
  coeffs[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    coeffs[k] = sign * binom[k] * mu;
  }
  return coeffs;
}

void require_even(LossOrder order, const char* caller) {
  if (!order.is_even()) {
    std::ostringstream msg;
    msg << caller << ": order " << order.value()
        << " is odd; its gradient polynomial has complex roots and cannot be"
           " used as a probability (see analyze_odd_order)";
    throw ValidationError(msg.str());
  }
}

}  // namespace

LossOrder LossOrder::even(int value) {
  if (value < 2 || value % 2 != 0) {
    throw ValidationError("loss order must be even and >= 2, got " +
                          std::to_string(value));
  }
  return LossOrder(value);
}

LossOrder LossOrder::for_analysis(int value) {
  if (value < 2) {
    throw ValidationError("loss order must be >= 2, got " +
                          std::to_string(value));
  }
  return LossOrder(value);
}

Posterior::Posterior(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << "posterior must lie in [0, 1], got " << value;
    throw ValidationError(msg.str());
  }
}

GradientPolynomial::GradientPolynomial(LossOrder order, Posterior mu,
                                       std::vector<double> coefficients)
    : order_(order), mu_(mu), coeffs_(std::move(coefficients)) {
  if (static_cast<int>(coeffs_.size()) != order_.value()) {
    throw ValidationError("gradient polynomial must have degree order - 1");
  }
}

double GradientPolynomial::operator()(double y) const noexcept {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * y + c;
  return acc;
}

double GradientPolynomial::derivative(double y) const noexcept {
  const int n = degree();
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc = acc * y + coeffs_[i] * (n - i);
  return acc;
}

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) {
    throw ValidationError("solver tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw ValidationError("solver max_iterations must be >= 1");
  }
}

double expected_loss(double y, Posterior mu, LossOrder order) {
  if (!(y >= 0.0 && y <= 1.0)) {
    std::ostringstream msg;
    msg << "expected_loss: prediction must lie in [0, 1], got " << y;
    throw ValidationError(msg.str());
  }
  const double m = mu.value();
  const int q = order.value();
  return (1.0 - m) * ipow(y, q) + m * ipow(1.0 - y, q);
}

GradientPolynomial gradient_coefficients(Posterior mu, LossOrder order) {
  require_even(order, "gradient_coefficients");
  return GradientPolynomial(order, mu,
                            expand_gradient(mu.value(), order.value() - 1));
}

Posterior closed_form_transform(Posterior mu, LossOrder order) {
  require_even(order, "closed_form_transform");
  const double m = mu.value();
  if (order.value() == 2 || m == 0.0 || m == 1.0) return mu;

  const double inv_degree = 1.0 / (order.value() - 1);
  // Evaluate from whichever side keeps the ratio <= 1.
  if (m <= 0.5) {
    const double r = std::pow(m / (1.0 - m), inv_degree);
    return Posterior(r / (1.0 + r));
  }
  const double s = std::pow((1.0 - m) / m, inv_degree);
  return Posterior(1.0 / (1.0 + s));
}

Posterior newton_transform(Posterior mu, LossOrder order,
                           const SolverConfig& config) {
  require_even(order, "newton_transform");
  config.validate();
  const double m = mu.value();
  if (m == 0.0 || m == 1.0) return mu;

  // Same polynomial as gradient_coefficients, kept in factored form. The
  // expanded coefficients cancel badly when mu is close to 0 or 1.
  const int n = order.value() - 1;
  const double w0 = 1.0 - m;
  auto poly = [&](double v) { return w0 * ipow(v, n) + m * ipow(v - 1.0, n); };
  auto slope = [&](double v) {
    return n * (w0 * ipow(v, n - 1) + m * ipow(v - 1.0, n - 1));
  };
  // p(0) = -mu < 0 and p(1) = 1 - mu > 0; p is increasing in between.
  double lo = 0.0;
  double hi = 1.0;
  double y = m;
  double f = poly(y);
  double step = 1.0;
  double step_before = 1.0;
  for (int iter = 0; iter < config.max_iterations; ++iter) {
    if (f == 0.0) return Posterior(y);
    if (f < 0.0) {
      lo = y;
    } else {
      hi = y;
    }

    // Bisect when Newton leaves the bracket or is not at least halving the
    // step from two iterations back (slow convergence near tiny roots).
    const double df = slope(y);
    double next = 0.5 * (lo + hi);
    if (df > 0.0 && std::abs(2.0 * f) <= std::abs(step_before * df)) {
      const double candidate = y - f / df;
      if (candidate > lo && candidate < hi) next = candidate;
    }
    step_before = step;
    step = next - y;
    if (std::abs(f) <= config.tolerance && std::abs(step) <= config.tolerance) {
      return Posterior(y);
    }
    if (hi - lo <= config.tolerance) return Posterior(next);
    y = next;
    f = poly(y);
  }

  std::ostringstream msg;
  msg << "newton_transform: no convergence after " << config.max_iterations
      << " iterations (mu=" << m << ", order=" << order.value()
      << ", last iterate " << y << ", residual " << f << ")";
  throw SolverError(msg.str(), y, f);
}

Posterior brute_force_transform(Posterior mu, LossOrder order,
                                std::int64_t grid_steps) {
  if (grid_steps < 100) {
    throw ValidationError("brute_force_transform: grid_steps must be >= 100");
  }
  const double m = mu.value();
  const int q = order.value();
  const double w0 = 1.0 - m;
  auto loss = [&](double y) { return w0 * ipow(y, q) + m * ipow(1.0 - y, q); };

  const double h = 1.0 / static_cast<double>(grid_steps);
  std::int64_t best = 0;
  double best_loss = loss(0.0);
  for (std::int64_t i = 1; i <= grid_steps; ++i) {
    const double y = (i == grid_steps) ? 1.0 : static_cast<double>(i) * h;
    const double value = loss(y);
    if (value < best_loss) {
      best_loss = value;
      best = i;
    }
  }

  double a = static_cast<double>(best > 0 ? best - 1 : 0) * h;
  double b = best < grid_steps ? static_cast<double>(best + 1) * h : 1.0;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = loss(c);
  double fd = loss(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-15; ++iter) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = loss(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = loss(d);
    }
  }
  double refined = 0.5 * (a + b);
  // The grid point itself may still be better (flat minimum, endpoints).
  const double grid_point = static_cast<double>(best) * h;
  if (loss(grid_point) < loss(refined)) refined = grid_point;
  if (refined < 0.0) refined = 0.0;
  if (refined > 1.0) refined = 1.0;
  return Posterior(refined);
}

std::vector<double> odd_order_gradient_coefficients(Posterior mu,
                                                    LossOrder order) {
  if (order.is_even()) {
    throw ValidationError("odd_order_gradient_coefficients: order " +
                          std::to_string(order.value()) + " is even");
  }
  return expand_gradient(mu.value(), order.value() - 1);
}

RootAnalysis analyze_odd_order(Posterior mu, LossOrder order,
                               double imag_tolerance) {
  if (order.is_even()) {
    throw ValidationError("analyze_odd_order: order " +
                          std::to_string(order.value()) +
                          " is even; use the transform functions");
  }
  const int degree = order.value() - 1;
  const double m = mu.value();
  RootAnalysis analysis;

  if (m == 0.0 || m == 1.0) {
    // y^n or (y - 1)^n: a single root of multiplicity n.
    analysis.roots.assign(static_cast<std::size_t>(degree), {m, 0.0});
  } else if (degree == 2) {
    // y^2 - 2 mu y + mu.
    const double b = -2.0 * m;
    const double c = m;
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      analysis.roots = {{(-b - root) / 2.0, 0.0}, {(-b + root) / 2.0, 0.0}};
    } else {
      const double im = std::sqrt(-disc) / 2.0;
      analysis.roots = {{-b / 2.0, -im}, {-b / 2.0, im}};
    }
  } else {
    const std::vector<double> coeffs = expand_gradient(m, degree);
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) {
      companion(i, degree - 1) = -coeffs[degree - i];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    const auto& values = solver.eigenvalues();
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      analysis.roots.push_back(values[i]);
    }
  }

  for (const auto& root : analysis.roots) {
    if (std::abs(root.imag()) <= imag_tolerance &&
        root.real() >= -imag_tolerance && root.real() <= 1.0 + imag_tolerance) {
      analysis.has_valid_probability_root = true;
    }
  }
  return analysis;
}

}  // namespace minkowski
