#pragma once

#include <span>

#include "seqclass/pattern.hpp"

namespace seqclass {

// Margin losses satisfying: value depends on the margin only, derivative <= 0,
// strictly convex. The enum is the extension point for further losses.
enum class LossKind { logistic, squared_hinge };

// logistic: log(1 + e^{-m}), overflow-safe. squared_hinge: max(1-m, 0)^2.
double loss_value(LossKind kind, double m);

// logistic: -1/(1 + e^{m}). squared_hinge: 2(m-1) for m < 1, else 0.
double loss_derivative(LossKind kind, double m);

struct ElasticNetPenalty {
  double C = 1.0;      // penalty weight, >= 0
  double alpha = 0.5;  // l1 share, in [0, 1]
};

// alpha * sum |b_j| + (1-alpha) * 1/2 * sum b_j^2, without the C factor.
double regularizer_value(const ElasticNetPenalty& penalty, const WeightMap& weights);

// Penalized gradient at coordinate beta given the raw data term. At beta = 0
// the l1 subgradient is chosen to minimize the magnitude (soft threshold).
double penalty_slope(const ElasticNetPenalty& penalty, double beta, double raw_gradient);

// sum_i loss(m_i) + C * regularizer_value(weights).
double total_objective(LossKind kind, const ElasticNetPenalty& penalty,
                       std::span<const double> margins, const WeightMap& weights);

}  // namespace seqclass
