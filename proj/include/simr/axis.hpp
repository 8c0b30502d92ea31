#ifndef SIMR_AXIS_HPP
#define SIMR_AXIS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace simr {

enum class TokenKind { word, number, punctuation };

// A token anchored at the mean position of its characters.
struct AxisToken {
  std::u32string surface;  // normalized (case-folded)
  double position = 0.0;   // (start + end - 1) / 2
  std::size_t start = 0;   // character offsets, [start, end)
  std::size_t end = 0;
  TokenKind kind = TokenKind::word;
};

// One text's tokens mapped onto its axis, sorted by position.
struct AxisMap {
  std::vector<AxisToken> tokens;
  std::size_t text_length = 0;
};

// Per-language character classes: which codepoints form words, which are
// emitted as punctuation tokens.  Digits 0-9 are always numbers.
struct TokenRules {
  std::vector<std::pair<char32_t, char32_t>> letter_ranges;
  std::u32string punct;

  bool is_letter(char32_t c) const;
  bool is_punct(char32_t c) const;
  bool is_digit(char32_t c) const { return c >= U'0' && c <= U'9'; }

  static TokenRules defaults();
};

// One word token per maximal letter run, one number token per maximal digit
// run, one punctuation token per punctuation character.
AxisMap tokenize_cognate_mode(const std::u32string& text,
                              const TokenRules& rules);

// Word tokens are occurrences of vocab strings (overlaps allowed, matched on
// folded text); numbers and punctuation as in cognate mode.
AxisMap tokenize_lexicon_mode(const std::u32string& text,
                              const std::vector<std::u32string>& vocab,
                              const TokenRules& rules);

}  // namespace simr

#endif
