#include "seqclass/eval.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace seqclass {

namespace {

struct TieBlock {
  std::size_t tp;  // positives at this score
  std::size_t fp;  // negatives at this score
};

// Tie blocks in descending score order.
std::vector<TieBlock> tie_blocks(std::span<const ScoredItem> items,
                                 std::size_t& positives, std::size_t& negatives) {
  std::vector<ScoredItem> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const ScoredItem& a, const ScoredItem& b) { return a.score > b.score; });
  std::vector<TieBlock> blocks;
  positives = 0;
  negatives = 0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    TieBlock block{0, 0};
    while (j < sorted.size() && sorted[j].score == sorted[i].score) {
      if (sorted[j].label > 0) {
        ++block.tp;
        ++positives;
      } else {
        ++block.fp;
        ++negatives;
      }
      ++j;
    }
    blocks.push_back(block);
    i = j;
  }
  return blocks;
}

void require_both_classes(std::size_t positives, std::size_t negatives) {
  if (positives == 0 || negatives == 0) {
    throw MetricError("metric undefined: need at least one positive and one negative");
  }
}

}  // namespace

double auc(std::span<const ScoredItem> items) {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  auto blocks = tie_blocks(items, positives, negatives);
  require_both_classes(positives, negatives);
  double credit = 0.0;
  std::size_t negatives_above = 0;
  for (const TieBlock& b : blocks) {
    double below = static_cast<double>(negatives - negatives_above - b.fp);
    credit += static_cast<double>(b.tp) * (below + 0.5 * static_cast<double>(b.fp));
    negatives_above += b.fp;
  }
  return credit / (static_cast<double>(positives) * static_cast<double>(negatives));
}

double auc50(std::span<const ScoredItem> items) {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  auto blocks = tie_blocks(items, positives, negatives);
  require_both_classes(positives, negatives);
  const double cap = static_cast<double>(std::min<std::size_t>(50, negatives));

  double area = 0.0;
  double tp = 0.0;
  double fp = 0.0;
  for (const TieBlock& b : blocks) {
    double tp_next = tp + static_cast<double>(b.tp);
    double fp_next = fp + static_cast<double>(b.fp);
    if (fp_next <= cap) {
      area += (fp_next - fp) * 0.5 * (tp + tp_next);
      tp = tp_next;
      fp = fp_next;
      if (fp == cap) break;
    } else {
      // truncate inside the tie block: the diagonal segment is linear in fp
      double frac = (cap - fp) / (fp_next - fp);
      double tp_at_cap = tp + frac * static_cast<double>(b.tp);
      area += (cap - fp) * 0.5 * (tp + tp_at_cap);
      fp = cap;
      break;
    }
  }
  return area / (static_cast<double>(positives) * cap);
}

double ber(const ConfusionCounts& c) {
  if (c.tp + c.fn == 0 || c.fp + c.tn == 0) {
    throw MetricError("BER undefined: empty class");
  }
  double miss = static_cast<double>(c.fn) / static_cast<double>(c.tp + c.fn);
  double fall = static_cast<double>(c.fp) / static_cast<double>(c.fp + c.tn);
  return 0.5 * (miss + fall);
}

ConfusionCounts confusion(std::span<const ScoredItem> items) {
  ConfusionCounts c;
  for (const ScoredItem& item : items) {
    bool predicted_pos = item.score > 0;
    if (item.label > 0) {
      predicted_pos ? ++c.tp : ++c.fn;
    } else {
      predicted_pos ? ++c.fp : ++c.tn;
    }
  }
  return c;
}

std::vector<std::pair<double, double>> roc_points(std::span<const ScoredItem> items) {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  auto blocks = tie_blocks(items, positives, negatives);
  require_both_classes(positives, negatives);
  std::vector<std::pair<double, double>> points;
  points.emplace_back(0.0, 0.0);
  std::size_t tp = 0;
  std::size_t fp = 0;
  for (const TieBlock& b : blocks) {
    tp += b.tp;
    fp += b.fp;
    points.emplace_back(static_cast<double>(fp) / static_cast<double>(negatives),
                        static_cast<double>(tp) / static_cast<double>(positives));
  }
  return points;
}

std::vector<FoldSplit> kfold_split(const Corpus& corpus, std::size_t k,
                                   std::uint64_t seed) {
  if (k < 2) throw MetricError("k-fold split needs k >= 2");
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> neg;
  for (const SequenceRecord& r : corpus.records()) {
    (r.label > 0 ? pos : neg).push_back(r.id);
  }
  if (pos.size() < k || neg.size() < k) {
    throw MetricError("each class needs at least k members for a k-fold split");
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);

  std::vector<FoldSplit> folds(k);
  for (std::size_t i = 0; i < pos.size(); ++i) folds[i % k].test.push_back(pos[i]);
  for (std::size_t i = 0; i < neg.size(); ++i) folds[i % k].test.push_back(neg[i]);
  for (FoldSplit& fold : folds) {
    std::sort(fold.test.begin(), fold.test.end());
    std::vector<bool> in_test(corpus.size(), false);
    for (std::uint32_t id : fold.test) in_test[id] = true;
    for (std::uint32_t id = 0; id < corpus.size(); ++id) {
      if (!in_test[id]) fold.train.push_back(id);
    }
  }
  return folds;
}

}  // namespace seqclass
