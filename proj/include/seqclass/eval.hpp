#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "seqclass/corpus.hpp"

namespace seqclass {

class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScoredItem {
  double score;
  int label;  // +1 or -1
};

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
};

// Mann-Whitney statistic with half credit for ties. Requires both classes.
double auc(std::span<const ScoredItem> items);

// ROC area truncated after min(50, Q) negatives, FP axis normalized by that
// count and TP axis by P; ties integrate as diagonal segments.
double auc50(std::span<const ScoredItem> items);

// 1/2 (FN/(TP+FN) + FP/(FP+TN)); requires both denominators positive.
double ber(const ConfusionCounts& counts);

// Counts at the fixed threshold score > 0.
ConfusionCounts confusion(std::span<const ScoredItem> items);

// Cumulative (FP fraction, TP fraction) per tie block, for external plotting.
std::vector<std::pair<double, double>> roc_points(std::span<const ScoredItem> items);

struct FoldSplit {
  std::vector<std::uint32_t> train;
  std::vector<std::uint32_t> test;
};

// Stratified k-fold partition, deterministic in the seed. Each class needs
// at least k members.
std::vector<FoldSplit> kfold_split(const Corpus& corpus, std::size_t k,
                                   std::uint64_t seed);

}  // namespace seqclass
