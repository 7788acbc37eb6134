#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqclass {

using Token = std::string;

// Reserved marker: matches exactly one arbitrary token.
inline constexpr char kWildcardMarker = '*';

// nullopt denotes a wildcard position.
using PatternElem = std::optional<Token>;

enum class Tokenization { chars, words };

struct Pattern {
  std::vector<PatternElem> elems;

  std::size_t length() const { return elems.size(); }
  bool operator==(const Pattern&) const = default;
};

inline PatternElem wildcard_elem() { return std::nullopt; }
inline PatternElem token_elem(Token t) { return PatternElem(std::move(t)); }

// Tokens sort lexicographically; the wildcard sorts after every token.
bool elem_less(const PatternElem& a, const PatternElem& b);

// Total order used for tie-breaking and for deterministic map iteration:
// shorter patterns first, then element-wise with the wildcard greatest.
struct PatternOrder {
  bool operator()(const Pattern& a, const Pattern& b) const;
};

using WeightMap = std::map<Pattern, double, PatternOrder>;

// Char mode concatenates tokens, word mode joins them with single spaces;
// wildcards render as "*" in both.
std::string to_string(const Pattern& p, Tokenization mode);

// Inverse of to_string. Throws std::invalid_argument on an empty pattern.
Pattern parse_pattern(std::string_view text, Tokenization mode);

// Number of wildcards at the end of the pattern.
std::size_t trailing_wildcards(const Pattern& p);

// First/last elements are tokens, no wildcard run longer than maxgap.
bool valid_pattern(const Pattern& p, std::size_t maxgap);

}  // namespace seqclass
