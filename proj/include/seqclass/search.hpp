#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "seqclass/corpus.hpp"
#include "seqclass/loss.hpp"
#include "seqclass/pattern.hpp"

namespace seqclass {

enum class Traversal { bfs, dfs };

struct SearchConfig {
  std::size_t maxgap = 0;   // longest allowed run of consecutive wildcards
  std::size_t minpat = 1;   // minimum feature length (wildcards count)
  std::size_t maxpat = std::numeric_limits<std::size_t>::max();
  std::size_t minsup = 1;   // minimum document support
  Traversal traversal = Traversal::dfs;
};

// A prefix in the expansion tree. Wildcard-terminated nodes are internal
// only and never eligible as features.
struct SearchNode {
  Pattern pattern;
  std::vector<Posting> occ;         // match end positions, sorted by (doc, pos)
  std::vector<std::uint32_t> docs;  // distinct matching docs, ascending
  std::size_t support_pos = 0;
  std::size_t support_neg = 0;
  std::size_t trailing_wildcards = 0;
};

SearchNode make_search_node(Pattern pattern, std::vector<Posting> occ,
                            const Corpus& corpus);

// Occurrence list of a pattern computed by stepping the unigram index.
std::vector<Posting> project_pattern(const Pattern& pattern, const Corpus& corpus);

// Penalized gradient of the node's pattern at coordinate value beta:
// sum over distinct matching docs of y_i * xi'(m_i), then the penalty slope.
double node_gradient(const SearchNode& node, const Corpus& corpus, LossKind kind,
                     const ElasticNetPenalty& penalty,
                     std::span<const double> margins, double beta);

// Upper bound on |gradient| of every zero-weight extension of the node,
// from the class-wise loss-derivative sums over the node's documents.
double node_bound(const SearchNode& node, const Corpus& corpus, LossKind kind,
                  const ElasticNetPenalty& penalty, std::span<const double> margins);

// One unigram root per alphabet token, minsup applied.
std::vector<SearchNode> root_nodes(const Corpus& corpus, const SearchConfig& cfg);

// Children per distinct next element, plus a wildcard child while the
// trailing wildcard run is below maxgap; minsup filtered; tokens in
// lexicographic order with the wildcard child last.
std::vector<SearchNode> expand(const SearchNode& node, const Corpus& corpus,
                               const SearchConfig& cfg);

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  std::uint64_t bound_checks = 0;
  std::uint64_t prunes = 0;
};

struct BestFeature {
  Pattern pattern;
  double gradient;                  // signed penalized gradient
  std::vector<std::uint32_t> docs;  // distinct matching docs, ascending
};

// Gauss-Southwell selection: the admissible pattern with maximum absolute
// penalized gradient, searched by prefix expansion with bound pruning.
// Features with nonzero weight are re-evaluated exactly outside the tree.
// Ties break to the shortest pattern, then PatternOrder. Returns nullopt
// when every candidate gradient is zero.
std::optional<BestFeature> find_best_feature(const Corpus& corpus, LossKind kind,
                                             const ElasticNetPenalty& penalty,
                                             std::span<const double> margins,
                                             const WeightMap& weights,
                                             const SearchConfig& cfg,
                                             SearchStats* stats = nullptr);

}  // namespace seqclass
