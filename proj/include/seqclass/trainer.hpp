#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "seqclass/corpus.hpp"
#include "seqclass/loss.hpp"
#include "seqclass/model.hpp"
#include "seqclass/search.hpp"

namespace seqclass {

struct TrainerConfig {
  LossKind kind = LossKind::logistic;
  ElasticNetPenalty penalty;
  SearchConfig search;
  Tokenization tokenization = Tokenization::chars;  // model metadata
  double convergence_threshold = 0.005;
  std::size_t max_iterations = 5000;
  int verbosity = 0;
};

struct TrainerState {
  WeightMap weights;
  std::vector<double> margins;  // m_i = y_i * score_i
  std::size_t iteration = 0;
  double objective = 0.0;
};

// Step size for updating the pattern's weight by -step * gradient: doubled
// from 0.01 while the objective keeps strictly decreasing (30 doublings max),
// then bisected to 1e-4 relative width. Returns 0 when no improving step
// exists after 30 halvings of the initial step.
double line_search(const TrainerState& state, const Corpus& corpus,
                   const Pattern& pattern, double gradient, LossKind kind,
                   const ElasticNetPenalty& penalty,
                   std::span<const std::uint32_t> match_docs);

// beta_pattern += delta; margins shift by y_i * delta over match_docs; the
// objective is recomputed and a weight landing on exactly 0 is dropped.
void apply_update(TrainerState& state, const Corpus& corpus, const Pattern& pattern,
                  double delta, std::span<const std::uint32_t> match_docs,
                  LossKind kind, const ElasticNetPenalty& penalty);

// Mean absolute margin change below the threshold.
bool converged(std::span<const double> margins, std::span<const double> previous,
               double threshold);

struct TrainReport {
  std::vector<double> objectives;  // objective after each iteration, [0] = initial
  TrainerState final_state;
  SearchStats last_search;
  std::size_t iterations = 0;
};

// Coordinate descent from beta = 0: select the max-|gradient| feature, line
// search the step, update weights and margins, stop on convergence, on the
// zero-gradient sentinel, or at max_iterations.
Model train(const Corpus& corpus, const TrainerConfig& cfg,
            TrainReport* report = nullptr, std::ostream* log = nullptr);

}  // namespace seqclass
