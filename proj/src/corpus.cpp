#include "seqclass/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

namespace seqclass {

namespace {

std::optional<int> parse_label(std::string_view field) {
  if (field == "+1" || field == "1") return +1;
  if (field == "-1") return -1;
  return std::nullopt;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void check_tokens(const std::vector<Token>& tokens, std::size_t line_no) {
  for (const Token& t : tokens) {
    if (t.size() == 1 && t[0] == kWildcardMarker) {
      throw CorpusError("line " + std::to_string(line_no) +
                        ": sequence contains the reserved wildcard marker '*'");
    }
  }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, Tokenization mode) {
  std::vector<Token> tokens;
  if (mode == Tokenization::chars) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        tokens.emplace_back(1, c);
      }
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
  }
  if (tokens.empty()) throw CorpusError("empty sequence");
  return tokens;
}

Corpus Corpus::from_records(std::vector<SequenceRecord> records,
                            bool require_both_classes) {
  Corpus c;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SequenceRecord& r = records[i];
    if (r.id != i) throw CorpusError("record ids must be 0..N-1 in order");
    if (r.label != 1 && r.label != -1) throw CorpusError("label must be +1 or -1");
    if (r.tokens.empty()) throw CorpusError("record with empty token list");
    if (r.label > 0) {
      ++c.num_positive_;
    } else {
      ++c.num_negative_;
    }
    for (std::uint32_t p = 0; p < r.tokens.size(); ++p) {
      const Token& t = r.tokens[p];
      if (t.empty() || (t.size() == 1 && t[0] == kWildcardMarker)) {
        throw CorpusError("invalid token in record " + std::to_string(i));
      }
      c.alphabet_.insert(t);
      c.index_[t].push_back(Posting{static_cast<std::uint32_t>(i), p});
    }
  }
  if (require_both_classes) {
    if (c.num_positive_ == 0) throw CorpusError("no positive (+1) documents");
    if (c.num_negative_ == 0) throw CorpusError("no negative (-1) documents");
  }
  c.records_ = std::move(records);
  return c;
}

const std::vector<Posting>* Corpus::postings(const Token& t) const {
  auto it = index_.find(t);
  return it == index_.end() ? nullptr : &it->second;
}

Corpus parse_corpus(std::istream& in, Tokenization mode,
                    bool require_both_classes) {
  std::vector<SequenceRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (blank(line)) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw CorpusError("line " + std::to_string(line_no) +
                        ": expected <label><TAB><sequence>");
    }
    auto label = parse_label(std::string_view(line).substr(0, tab));
    if (!label) {
      throw CorpusError("line " + std::to_string(line_no) +
                        ": label must be +1, 1 or -1");
    }
    std::vector<Token> tokens;
    try {
      tokens = tokenize(std::string_view(line).substr(tab + 1), mode);
    } catch (const CorpusError&) {
      throw CorpusError("line " + std::to_string(line_no) + ": empty sequence");
    }
    check_tokens(tokens, line_no);
    records.push_back(SequenceRecord{static_cast<std::uint32_t>(records.size()),
                                     *label, std::move(tokens)});
  }
  if (records.empty()) throw CorpusError("no records in input");
  return Corpus::from_records(std::move(records), require_both_classes);
}

Corpus load_corpus(const std::filesystem::path& path, Tokenization mode,
                   bool require_both_classes) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path.string());
  return parse_corpus(in, mode, require_both_classes);
}

std::vector<InputSequence> load_sequences(const std::filesystem::path& path,
                                          Tokenization mode) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open " + path.string());
  std::vector<InputSequence> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (blank(line)) continue;
    InputSequence seq;
    std::string_view body(line);
    auto tab = line.find('\t');
    if (tab != std::string::npos) {
      if (auto label = parse_label(body.substr(0, tab))) {
        seq.label = *label;
        body = body.substr(tab + 1);
      }
    }
    try {
      seq.tokens = tokenize(body, mode);
    } catch (const CorpusError&) {
      throw CorpusError("line " + std::to_string(line_no) + ": empty sequence");
    }
    check_tokens(seq.tokens, line_no);
    out.push_back(std::move(seq));
  }
  return out;
}

}  // namespace seqclass
