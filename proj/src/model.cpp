#include "seqclass/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace seqclass {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, const std::string& context) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ModelError(context + ": bad number '" + std::string(text) + "'");
  }
  return v;
}

void sort_entries(std::vector<ModelEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const ModelEntry& a, const ModelEntry& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return PatternOrder{}(a.pattern, b.pattern);
  });
}

}  // namespace

bool pattern_matches(const Pattern& pattern, std::span<const Token> tokens) {
  const std::size_t n = pattern.elems.size();
  if (n == 0 || n > tokens.size()) return false;
  for (std::size_t s = 0; s + n <= tokens.size(); ++s) {
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      const PatternElem& e = pattern.elems[k];
      if (e && *e != tokens[s + k]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

Model::Model(std::vector<ModelEntry> entries, LossKind kind, Tokenization mode,
             std::size_t maxgap)
    : entries_(std::move(entries)), kind_(kind), mode_(mode), maxgap_(maxgap) {
  sort_entries(entries_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].weight == 0.0 || !std::isfinite(entries_[i].weight)) {
      throw ModelError("model weights must be nonzero and finite");
    }
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      if (entries_[i].pattern == entries_[j].pattern) {
        throw ModelError("duplicate pattern in model");
      }
    }
  }
}

Model Model::from_weights(const WeightMap& weights, LossKind kind,
                          Tokenization mode, std::size_t maxgap) {
  std::vector<ModelEntry> entries;
  for (const auto& [pattern, beta] : weights) {
    if (beta != 0.0) entries.push_back(ModelEntry{pattern, beta});
  }
  return Model(std::move(entries), kind, mode, maxgap);
}

double Model::score(std::span<const Token> tokens) const {
  double total = 0.0;
  for (const ModelEntry& e : entries_) {
    if (pattern_matches(e.pattern, tokens)) total += e.weight;
  }
  return total;
}

Prediction Model::predict(std::span<const Token> tokens) const {
  Prediction p;
  p.score = score(tokens);
  p.label = p.score > 0 ? +1 : -1;
  if (kind_ == LossKind::logistic) {
    p.probability = 1.0 / (1.0 + std::exp(-p.score));
  }
  return p;
}

void Model::save(std::ostream& out) const {
  out << "#loss\t" << (kind_ == LossKind::logistic ? "logistic" : "squared_hinge") << '\n';
  out << "#tokenization\t" << (mode_ == Tokenization::chars ? "char" : "word") << '\n';
  out << "#maxgap\t" << maxgap_ << '\n';
  for (const ModelEntry& e : entries_) {
    out << format_double(e.weight) << '\t' << to_string(e.pattern, mode_) << '\n';
  }
}

void Model::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot write " + path.string());
  save(out);
  if (!out) throw ModelError("write failed for " + path.string());
}

Model Model::load(std::istream& in) {
  std::optional<LossKind> kind;
  std::optional<Tokenization> mode;
  std::optional<std::size_t> maxgap;
  std::vector<ModelEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string context = "model line " + std::to_string(line_no);
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ModelError(context + ": missing tab");
    std::string_view head(line.data(), tab);
    std::string_view rest(line.data() + tab + 1, line.size() - tab - 1);
    if (line[0] == '#') {
      std::string_view key = head.substr(1);
      if (key == "loss") {
        if (rest == "logistic") {
          kind = LossKind::logistic;
        } else if (rest == "squared_hinge") {
          kind = LossKind::squared_hinge;
        } else {
          throw ModelError(context + ": unknown loss '" + std::string(rest) + "'");
        }
      } else if (key == "tokenization") {
        if (rest == "char") {
          mode = Tokenization::chars;
        } else if (rest == "word") {
          mode = Tokenization::words;
        } else {
          throw ModelError(context + ": unknown tokenization '" + std::string(rest) + "'");
        }
      } else if (key == "maxgap") {
        maxgap = static_cast<std::size_t>(parse_double(rest, context));
      } else {
        throw ModelError(context + ": unknown header key '" + std::string(key) + "'");
      }
      continue;
    }
    if (!kind || !mode || !maxgap) {
      throw ModelError(context + ": entries before complete header");
    }
    double weight = parse_double(head, context);
    if (weight == 0.0) throw ModelError(context + ": zero weight");
    if (!std::isfinite(weight)) throw ModelError(context + ": non-finite weight");
    Pattern pattern;
    try {
      pattern = parse_pattern(rest, *mode);
    } catch (const std::invalid_argument&) {
      throw ModelError(context + ": empty pattern");
    }
    if (!valid_pattern(pattern, *maxgap)) {
      throw ModelError(context + ": invalid pattern '" + std::string(rest) + "'");
    }
    entries.push_back(ModelEntry{std::move(pattern), weight});
  }
  if (!kind || !mode || !maxgap) throw ModelError("model header incomplete");
  return Model(std::move(entries), *kind, *mode, *maxgap);
}

Model Model::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open " + path.string());
  return load(in);
}

}  // namespace seqclass
