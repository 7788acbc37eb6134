#include "seqclass/loss.hpp"

#include <cmath>
#include <cstdlib>

namespace seqclass {

double loss_value(LossKind kind, double m) {
  switch (kind) {
    case LossKind::logistic:
      // stable on both tails
      return m <= 0 ? -m + std::log1p(std::exp(m)) : std::log1p(std::exp(-m));
    case LossKind::squared_hinge: {
      double h = 1.0 - m;
      return h > 0 ? h * h : 0.0;
    }
  }
  std::abort();
}

double loss_derivative(LossKind kind, double m) {
  switch (kind) {
    case LossKind::logistic:
      return m >= 0 ? -std::exp(-m) / (1.0 + std::exp(-m)) : -1.0 / (1.0 + std::exp(m));
    case LossKind::squared_hinge:
      return m < 1.0 ? 2.0 * (m - 1.0) : 0.0;
  }
  std::abort();
}

double regularizer_value(const ElasticNetPenalty& penalty, const WeightMap& weights) {
  double l1 = 0.0;
  double l2 = 0.0;
  for (const auto& [pattern, beta] : weights) {
    l1 += std::abs(beta);
    l2 += beta * beta;
  }
  return penalty.alpha * l1 + (1.0 - penalty.alpha) * 0.5 * l2;
}

double penalty_slope(const ElasticNetPenalty& penalty, double beta, double raw_gradient) {
  if (beta != 0.0) {
    double sign = beta > 0 ? 1.0 : -1.0;
    return raw_gradient + penalty.C * (penalty.alpha * sign + (1.0 - penalty.alpha) * beta);
  }
  double shrink = std::abs(raw_gradient) - penalty.C * penalty.alpha;
  if (shrink <= 0.0) return 0.0;
  return raw_gradient > 0 ? shrink : -shrink;
}

double total_objective(LossKind kind, const ElasticNetPenalty& penalty,
                       std::span<const double> margins, const WeightMap& weights) {
  double total = 0.0;
  for (double m : margins) total += loss_value(kind, m);
  return total + penalty.C * regularizer_value(penalty, weights);
}

}  // namespace seqclass
