#pragma once

// Shared test fixtures: small corpora, random corpora, the planted-motif
// generator.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "seqclass/corpus.hpp"

namespace testutil {

using seqclass::Corpus;
using seqclass::SequenceRecord;
using seqclass::Token;

// Char-mode corpus from (label, sequence) pairs.
inline Corpus make_corpus(const std::vector<std::pair<int, std::string>>& rows,
                          bool require_both_classes = true) {
  std::vector<SequenceRecord> records;
  for (const auto& [label, text] : rows) {
    std::vector<Token> tokens;
    for (char c : text) tokens.emplace_back(1, c);
    records.push_back(SequenceRecord{static_cast<std::uint32_t>(records.size()),
                                     label, std::move(tokens)});
  }
  return Corpus::from_records(std::move(records), require_both_classes);
}

struct RandomCorpusParams {
  std::size_t min_docs = 4;
  std::size_t max_docs = 12;
  std::size_t min_len = 3;
  std::size_t max_len = 10;
  std::size_t alphabet = 3;  // <= 4
};

// Random labeled corpus with both classes present.
inline Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusParams& p = {}) {
  std::uniform_int_distribution<std::size_t> n_docs(p.min_docs, p.max_docs);
  std::uniform_int_distribution<std::size_t> len(p.min_len, p.max_len);
  std::uniform_int_distribution<int> sym(0, static_cast<int>(p.alphabet) - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::size_t n = n_docs(rng);
  std::vector<std::pair<int, std::string>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    int label = i == 0 ? +1 : i == 1 ? -1 : (coin(rng) ? +1 : -1);
    std::string text;
    std::size_t m = len(rng);
    for (std::size_t j = 0; j < m; ++j) text += static_cast<char>('A' + sym(rng));
    rows.emplace_back(label, std::move(text));
  }
  return make_corpus(rows);
}

inline const std::string kProteinAlphabet = "ACDEFGHIKLMNPQRSTVWY";
inline const std::string kMotif = "GYC";

// Positives carry the motif at a random offset; negatives are resampled
// until they do not contain it.
inline Corpus planted_motif_corpus(std::size_t n_pos, std::size_t n_neg,
                                   std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> sym(0, kProteinAlphabet.size() - 1);
  auto random_seq = [&]() {
    std::string s;
    for (std::size_t i = 0; i < length; ++i) s += kProteinAlphabet[sym(rng)];
    return s;
  };
  std::vector<std::pair<int, std::string>> rows;
  for (std::size_t i = 0; i < n_pos; ++i) {
    std::string s = random_seq();
    std::uniform_int_distribution<std::size_t> at(0, length - kMotif.size());
    s.replace(at(rng), kMotif.size(), kMotif);
    rows.emplace_back(+1, std::move(s));
  }
  for (std::size_t i = 0; i < n_neg; ++i) {
    std::string s = random_seq();
    while (s.find(kMotif) != std::string::npos) s = random_seq();
    rows.emplace_back(-1, std::move(s));
  }
  return make_corpus(rows);
}

}  // namespace testutil
