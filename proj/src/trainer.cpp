#include "seqclass/trainer.hpp"

#include <cmath>
#include <ostream>

namespace seqclass {

namespace {

double weight_of(const WeightMap& weights, const Pattern& p) {
  auto it = weights.find(p);
  return it == weights.end() ? 0.0 : it->second;
}

// Penalty contribution of a single coordinate, without the C factor.
double coordinate_penalty(const ElasticNetPenalty& penalty, double beta) {
  return penalty.alpha * std::abs(beta) + (1.0 - penalty.alpha) * 0.5 * beta * beta;
}

}  // namespace

double line_search(const TrainerState& state, const Corpus& corpus,
                   const Pattern& pattern, double gradient, LossKind kind,
                   const ElasticNetPenalty& penalty,
                   std::span<const std::uint32_t> match_docs) {
  const double beta = weight_of(state.weights, pattern);

  // Objective change for shifting this coordinate by delta; only the
  // matching documents and the coordinate's own penalty term move.
  auto objective_delta = [&](double delta) {
    double change = 0.0;
    for (std::uint32_t doc : match_docs) {
      double m = state.margins[doc];
      change += loss_value(kind, m + corpus.records()[doc].label * delta) -
                loss_value(kind, m);
    }
    change += penalty.C *
              (coordinate_penalty(penalty, beta + delta) - coordinate_penalty(penalty, beta));
    return change;
  };
  auto at_step = [&](double step) { return objective_delta(-step * gradient); };

  double step = 0.01;
  int shrinks = 0;
  while (at_step(step) >= 0.0 && shrinks < 30) {
    step /= 2.0;
    ++shrinks;
  }
  if (at_step(step) >= 0.0) return 0.0;

  int doublings = 0;
  while (doublings < 30 && at_step(step * 2.0) < at_step(step)) {
    step *= 2.0;
    ++doublings;
  }
  if (doublings == 30) return step;

  double lo = step;
  double hi = step * 2.0;
  while (hi - lo > 1e-4 * hi) {
    double mid = 0.5 * (lo + hi);
    if (at_step(mid) < at_step(lo)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void apply_update(TrainerState& state, const Corpus& corpus, const Pattern& pattern,
                  double delta, std::span<const std::uint32_t> match_docs,
                  LossKind kind, const ElasticNetPenalty& penalty) {
  if (delta != 0.0) {
    double beta = weight_of(state.weights, pattern) + delta;
    if (beta == 0.0) {
      state.weights.erase(pattern);
    } else {
      state.weights[pattern] = beta;
    }
    for (std::uint32_t doc : match_docs) {
      state.margins[doc] += corpus.records()[doc].label * delta;
    }
  }
  ++state.iteration;
  state.objective = total_objective(kind, penalty, state.margins, state.weights);
}

bool converged(std::span<const double> margins, std::span<const double> previous,
               double threshold) {
  double total = 0.0;
  for (std::size_t i = 0; i < margins.size(); ++i) {
    total += std::abs(margins[i] - previous[i]);
  }
  return total / static_cast<double>(margins.size()) < threshold;
}

Model train(const Corpus& corpus, const TrainerConfig& cfg,
            TrainReport* report, std::ostream* log) {
  TrainerState state;
  state.margins.assign(corpus.size(), 0.0);
  state.objective = total_objective(cfg.kind, cfg.penalty, state.margins, state.weights);

  TrainReport local;
  local.objectives.push_back(state.objective);

  std::vector<double> previous;
  for (std::size_t t = 1; t <= cfg.max_iterations; ++t) {
    previous = state.margins;
    auto best = find_best_feature(corpus, cfg.kind, cfg.penalty, state.margins,
                                  state.weights, cfg.search, &local.last_search);
    if (!best) break;

    double step = line_search(state, corpus, best->pattern, best->gradient,
                              cfg.kind, cfg.penalty, best->docs);
    if (step == 0.0) break;

    double delta = -step * best->gradient;
    double beta_old = weight_of(state.weights, best->pattern);
    // l1 coordinates stop at zero instead of crossing it
    if (cfg.penalty.alpha > 0.0 && beta_old != 0.0 &&
        (beta_old + delta) * beta_old < 0.0) {
      delta = -beta_old;
    }
    apply_update(state, corpus, best->pattern, delta, best->docs, cfg.kind, cfg.penalty);
    local.objectives.push_back(state.objective);
    local.iterations = t;

    if (cfg.verbosity >= 1 && log) {
      *log << "iter " << t << "\tfeature " << to_string(best->pattern, cfg.tokenization)
           << "\tgradient " << best->gradient << "\tstep " << step
           << "\tobjective " << state.objective
           << "\tvisited " << local.last_search.nodes_visited
           << "\tbound_checks " << local.last_search.bound_checks
           << "\tprunes " << local.last_search.prunes << '\n';
    }

    if (converged(state.margins, previous, cfg.convergence_threshold)) break;
  }

  Model model = Model::from_weights(state.weights, cfg.kind, cfg.tokenization,
                                    cfg.search.maxgap);
  if (report) {
    local.final_state = std::move(state);
    *report = std::move(local);
  }
  return model;
}

}  // namespace seqclass
