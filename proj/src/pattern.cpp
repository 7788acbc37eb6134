#include "seqclass/pattern.hpp"

#include <cctype>
#include <stdexcept>

namespace seqclass {

bool elem_less(const PatternElem& a, const PatternElem& b) {
  if (!a) return false;  // wildcard is never less than anything
  if (!b) return true;
  return *a < *b;
}

bool PatternOrder::operator()(const Pattern& a, const Pattern& b) const {
  if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
  for (std::size_t k = 0; k < a.elems.size(); ++k) {
    if (a.elems[k] != b.elems[k]) return elem_less(a.elems[k], b.elems[k]);
  }
  return false;
}

std::string to_string(const Pattern& p, Tokenization mode) {
  std::string out;
  for (std::size_t k = 0; k < p.elems.size(); ++k) {
    if (mode == Tokenization::words && k > 0) out += ' ';
    if (p.elems[k]) {
      out += *p.elems[k];
    } else {
      out += kWildcardMarker;
    }
  }
  return out;
}

Pattern parse_pattern(std::string_view text, Tokenization mode) {
  Pattern p;
  if (mode == Tokenization::chars) {
    for (char c : text) {
      if (static_cast<unsigned char>(c) == kWildcardMarker) {
        p.elems.push_back(wildcard_elem());
      } else {
        p.elems.push_back(token_elem(std::string(1, c)));
      }
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i > start) {
        std::string word(text.substr(start, i - start));
        if (word.size() == 1 && word[0] == kWildcardMarker) {
          p.elems.push_back(wildcard_elem());
        } else {
          p.elems.push_back(token_elem(std::move(word)));
        }
      }
    }
  }
  if (p.elems.empty()) throw std::invalid_argument("empty pattern");
  return p;
}

std::size_t trailing_wildcards(const Pattern& p) {
  std::size_t n = 0;
  for (auto it = p.elems.rbegin(); it != p.elems.rend() && !*it; ++it) ++n;
  return n;
}

bool valid_pattern(const Pattern& p, std::size_t maxgap) {
  if (p.elems.empty()) return false;
  if (!p.elems.front() || !p.elems.back()) return false;
  std::size_t run = 0;
  for (const auto& e : p.elems) {
    if (!e) {
      if (++run > maxgap) return false;
    } else {
      run = 0;
    }
  }
  return true;
}

}  // namespace seqclass
