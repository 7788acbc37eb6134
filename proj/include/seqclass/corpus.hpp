#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "seqclass/pattern.hpp"

namespace seqclass {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Posting {
  std::uint32_t doc;
  std::uint32_t pos;
  friend auto operator<=>(const Posting&, const Posting&) = default;
};

struct SequenceRecord {
  std::uint32_t id;
  int label;  // +1 or -1
  std::vector<Token> tokens;
};

// Immutable after construction; safe to share across threads for reads.
class Corpus {
 public:
  // Records must carry ids 0..n-1 in order, labels in {+1,-1}, non-empty
  // token lists with no token equal to the wildcard marker.
  static Corpus from_records(std::vector<SequenceRecord> records,
                             bool require_both_classes = true);

  const std::vector<SequenceRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const std::set<Token>& alphabet() const { return alphabet_; }
  const std::map<Token, std::vector<Posting>>& index() const { return index_; }

  // Sorted by (doc, pos); nullptr when the token never occurs.
  const std::vector<Posting>* postings(const Token& t) const;

  std::size_t num_positive() const { return num_positive_; }
  std::size_t num_negative() const { return num_negative_; }

 private:
  std::vector<SequenceRecord> records_;
  std::set<Token> alphabet_;
  std::map<Token, std::vector<Posting>> index_;
  std::size_t num_positive_ = 0;
  std::size_t num_negative_ = 0;
};

// Char mode: one token per non-whitespace character.
// Word mode: maximal runs of non-whitespace.
// Throws CorpusError when the text is empty after trimming.
std::vector<Token> tokenize(std::string_view text, Tokenization mode);

// Lines are "<label><TAB><sequence>", label in {+1, 1, -1}; blank lines are
// ignored; CRLF accepted. require_both_classes rejects single-class data.
Corpus parse_corpus(std::istream& in, Tokenization mode,
                    bool require_both_classes = true);
Corpus load_corpus(const std::filesystem::path& path, Tokenization mode,
                   bool require_both_classes = true);

// Prediction-time input: lines may be a bare sequence or label-TAB-sequence.
struct InputSequence {
  std::optional<int> label;
  std::vector<Token> tokens;
};
std::vector<InputSequence> load_sequences(const std::filesystem::path& path,
                                          Tokenization mode);

}  // namespace seqclass
