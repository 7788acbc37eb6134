#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "seqclass/loss.hpp"
#include "seqclass/pattern.hpp"

namespace seqclass {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelEntry {
  Pattern pattern;
  double weight;  // nonzero, finite
  bool operator==(const ModelEntry&) const = default;
};

struct Prediction {
  int label;  // +1 or -1; score 0 predicts -1
  double score;
  std::optional<double> probability;  // logistic link only
};

// True iff the pattern matches at some offset, each wildcard consuming
// exactly one token.
bool pattern_matches(const Pattern& pattern, std::span<const Token> tokens);

// Weighted pattern list, sorted by descending weight. Immutable once built.
class Model {
 public:
  Model(std::vector<ModelEntry> entries, LossKind kind, Tokenization mode,
        std::size_t maxgap);
  static Model from_weights(const WeightMap& weights, LossKind kind,
                            Tokenization mode, std::size_t maxgap);

  const std::vector<ModelEntry>& entries() const { return entries_; }
  LossKind kind() const { return kind_; }
  Tokenization tokenization() const { return mode_; }
  std::size_t maxgap() const { return maxgap_; }

  // Sum of weights of matching entries, each counted once.
  double score(std::span<const Token> tokens) const;
  Prediction predict(std::span<const Token> tokens) const;

  // Text format: "#key<TAB>value" headers (loss, tokenization, maxgap),
  // then one "weight<TAB>pattern" line per entry, weights at full precision.
  void save(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static Model load(std::istream& in);
  static Model load(const std::filesystem::path& path);

  bool operator==(const Model&) const = default;

 private:
  std::vector<ModelEntry> entries_;
  LossKind kind_;
  Tokenization mode_;
  std::size_t maxgap_;
};

}  // namespace seqclass
