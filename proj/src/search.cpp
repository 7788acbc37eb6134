#include "seqclass/search.hpp"

#include <cmath>
#include <deque>
#include <map>

namespace seqclass {

namespace {

double weight_of(const WeightMap& weights, const Pattern& p) {
  auto it = weights.find(p);
  return it == weights.end() ? 0.0 : it->second;
}

std::vector<std::uint32_t> distinct_docs(const std::vector<Posting>& occ) {
  std::vector<std::uint32_t> docs;
  for (const Posting& p : occ) {
    if (docs.empty() || docs.back() != p.doc) docs.push_back(p.doc);
  }
  return docs;
}

}  // namespace

SearchNode make_search_node(Pattern pattern, std::vector<Posting> occ,
                            const Corpus& corpus) {
  SearchNode node;
  node.docs = distinct_docs(occ);
  node.occ = std::move(occ);
  for (std::uint32_t doc : node.docs) {
    if (corpus.records()[doc].label > 0) {
      ++node.support_pos;
    } else {
      ++node.support_neg;
    }
  }
  node.trailing_wildcards = trailing_wildcards(pattern);
  node.pattern = std::move(pattern);
  return node;
}

std::vector<Posting> project_pattern(const Pattern& pattern, const Corpus& corpus) {
  std::vector<Posting> occ;
  if (pattern.elems.empty() || !pattern.elems.front()) return occ;
  if (const auto* roots = corpus.postings(*pattern.elems.front())) occ = *roots;
  for (std::size_t k = 1; k < pattern.elems.size(); ++k) {
    std::vector<Posting> next;
    for (const Posting& p : occ) {
      const auto& tokens = corpus.records()[p.doc].tokens;
      if (p.pos + 1 >= tokens.size()) continue;
      const PatternElem& elem = pattern.elems[k];
      if (!elem || *elem == tokens[p.pos + 1]) {
        next.push_back(Posting{p.doc, p.pos + 1});
      }
    }
    occ = std::move(next);
  }
  return occ;
}

double node_gradient(const SearchNode& node, const Corpus& corpus, LossKind kind,
                     const ElasticNetPenalty& penalty,
                     std::span<const double> margins, double beta) {
  double raw = 0.0;
  for (std::uint32_t doc : node.docs) {
    raw += corpus.records()[doc].label * loss_derivative(kind, margins[doc]);
  }
  return penalty_slope(penalty, beta, raw);
}

double node_bound(const SearchNode& node, const Corpus& corpus, LossKind kind,
                  const ElasticNetPenalty& penalty, std::span<const double> margins) {
  double grad_pos = 0.0;
  double grad_neg = 0.0;
  for (std::uint32_t doc : node.docs) {
    double d = loss_derivative(kind, margins[doc]);
    if (corpus.records()[doc].label > 0) {
      grad_pos += d;
    } else {
      grad_neg -= d;
    }
  }
  return std::max(std::abs(penalty_slope(penalty, 0.0, grad_pos)),
                  std::abs(penalty_slope(penalty, 0.0, grad_neg)));
}

std::vector<SearchNode> root_nodes(const Corpus& corpus, const SearchConfig& cfg) {
  std::vector<SearchNode> roots;
  for (const auto& [token, occ] : corpus.index()) {
    Pattern p;
    p.elems.push_back(token_elem(token));
    SearchNode node = make_search_node(std::move(p), occ, corpus);
    if (node.docs.size() >= cfg.minsup) roots.push_back(std::move(node));
  }
  return roots;
}

std::vector<SearchNode> expand(const SearchNode& node, const Corpus& corpus,
                               const SearchConfig& cfg) {
  std::vector<SearchNode> children;
  if (node.pattern.length() >= cfg.maxpat) return children;

  std::map<Token, std::vector<Posting>> by_token;
  std::vector<Posting> wildcard_occ;
  bool want_wildcard = node.trailing_wildcards < cfg.maxgap &&
                       node.pattern.length() + 1 < cfg.maxpat;
  for (const Posting& p : node.occ) {
    const auto& tokens = corpus.records()[p.doc].tokens;
    if (p.pos + 1 >= tokens.size()) continue;
    Posting next{p.doc, p.pos + 1};
    by_token[tokens[p.pos + 1]].push_back(next);
    if (want_wildcard) wildcard_occ.push_back(next);
  }

  auto emit = [&](PatternElem elem, std::vector<Posting> occ) {
    Pattern p = node.pattern;
    p.elems.push_back(std::move(elem));
    SearchNode child = make_search_node(std::move(p), std::move(occ), corpus);
    if (child.docs.size() >= cfg.minsup) children.push_back(std::move(child));
  };

  for (auto& [token, occ] : by_token) emit(token_elem(token), std::move(occ));
  if (want_wildcard && !wildcard_occ.empty()) {
    emit(wildcard_elem(), std::move(wildcard_occ));
  }
  return children;
}

std::optional<BestFeature> find_best_feature(const Corpus& corpus, LossKind kind,
                                             const ElasticNetPenalty& penalty,
                                             std::span<const double> margins,
                                             const WeightMap& weights,
                                             const SearchConfig& cfg,
                                             SearchStats* stats) {
  SearchStats local;
  std::optional<BestFeature> best;
  double tau = 0.0;

  auto consider = [&](const Pattern& pattern, double gradient,
                      const std::vector<std::uint32_t>& docs) {
    double magnitude = std::abs(gradient);
    if (magnitude == 0.0) return;
    bool better = !best || magnitude > tau ||
                  (magnitude == tau && PatternOrder{}(pattern, best->pattern));
    if (better) {
      best = BestFeature{pattern, gradient, docs};
      tau = magnitude;
    }
  };

  // Features already in the model carry a nonzero beta, so the zero-weight
  // bound does not cover them; evaluate them exactly up front.
  for (const auto& [pattern, beta] : weights) {
    if (beta == 0.0) continue;
    SearchNode node = make_search_node(pattern, project_pattern(pattern, corpus), corpus);
    consider(pattern, node_gradient(node, corpus, kind, penalty, margins, beta), node.docs);
  }

  std::deque<SearchNode> frontier;
  {
    std::vector<SearchNode> roots = root_nodes(corpus, cfg);
    if (cfg.traversal == Traversal::dfs) {
      for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        frontier.push_back(std::move(*it));
      }
    } else {
      for (auto& r : roots) frontier.push_back(std::move(r));
    }
  }

  while (!frontier.empty()) {
    SearchNode node;
    if (cfg.traversal == Traversal::dfs) {
      node = std::move(frontier.back());
      frontier.pop_back();
    } else {
      node = std::move(frontier.front());
      frontier.pop_front();
    }
    ++local.nodes_visited;

    if (node.trailing_wildcards == 0 && node.pattern.length() >= cfg.minpat) {
      double beta = weight_of(weights, node.pattern);
      consider(node.pattern,
               node_gradient(node, corpus, kind, penalty, margins, beta), node.docs);
    }

    if (node.pattern.length() >= cfg.maxpat) continue;
    ++local.bound_checks;
    // Strictly-below pruning keeps equal-magnitude candidates alive so the
    // tie-break sees the full candidate pool regardless of traversal order.
    if (node_bound(node, corpus, kind, penalty, margins) < tau) {
      ++local.prunes;
      continue;
    }
    std::vector<SearchNode> children = expand(node, corpus, cfg);
    if (cfg.traversal == Traversal::dfs) {
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        frontier.push_back(std::move(*it));
      }
    } else {
      for (auto& c : children) frontier.push_back(std::move(c));
    }
  }

  if (stats) *stats = local;
  return best;
}

}  // namespace seqclass
