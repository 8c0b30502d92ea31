#include "simr/axis.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "simr/errors.hpp"
#include "simr/utf8.hpp"

namespace simr {

namespace {

double mean_position(std::size_t start, std::size_t end) {
  return (static_cast<double>(start) + static_cast<double>(end) - 1.0) / 2.0;
}

void sort_tokens(std::vector<AxisToken>& tokens) {
  std::sort(tokens.begin(), tokens.end(),
            [](const AxisToken& a, const AxisToken& b) {
              if (a.position != b.position) return a.position < b.position;
              if (a.start != b.start) return a.start < b.start;
              return a.end < b.end;
            });
}

// Multi-pattern matcher (Aho-Corasick); reports every occurrence of every
// pattern, overlaps included.
class PatternScanner {
 public:
  explicit PatternScanner(const std::vector<std::u32string>& patterns) {
    nodes_.emplace_back();
    for (const auto& p : patterns) {
      if (p.empty()) continue;
      int v = 0;
      for (char32_t c : p) {
        auto it = nodes_[v].next.find(c);
        if (it == nodes_[v].next.end()) {
          nodes_.emplace_back();
          it = nodes_[v].next.emplace(c, static_cast<int>(nodes_.size()) - 1)
                   .first;
        }
        v = it->second;
      }
      nodes_[v].pattern_lengths.push_back(p.size());
    }
    build_links();
  }

  // Calls sink(start, end) for each match, end exclusive.
  template <typename Sink>
  void scan(const std::u32string& text, Sink&& sink) const {
    int v = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      v = step(v, text[i]);
      for (int u = v; u != 0; u = nodes_[u].dict_link) {
        for (std::size_t len : nodes_[u].pattern_lengths) {
          sink(i + 1 - len, i + 1);
        }
      }
    }
  }

 private:
  struct Node {
    std::map<char32_t, int> next;
    int fail = 0;
    int dict_link = 0;  // nearest suffix node that ends a pattern, else root
    std::vector<std::size_t> pattern_lengths;
  };

  int step(int v, char32_t c) const {
    while (true) {
      auto it = nodes_[v].next.find(c);
      if (it != nodes_[v].next.end()) return it->second;
      if (v == 0) return 0;
      v = nodes_[v].fail;
    }
  }

  void build_links() {
    std::queue<int> bfs;
    for (auto& [c, u] : nodes_[0].next) {
      nodes_[u].fail = 0;
      bfs.push(u);
    }
    while (!bfs.empty()) {
      const int v = bfs.front();
      bfs.pop();
      const int f = nodes_[v].fail;
      nodes_[v].dict_link =
          nodes_[f].pattern_lengths.empty() ? nodes_[f].dict_link : f;
      for (auto& [c, u] : nodes_[v].next) {
        nodes_[u].fail = step(nodes_[v].fail, c);
        bfs.push(u);
      }
    }
  }

  std::vector<Node> nodes_;
};

void emit_numbers_and_punct(const std::u32string& text, const TokenRules& rules,
                            std::vector<AxisToken>& out) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (rules.is_digit(text[i])) {
      std::size_t j = i;
      while (j < n && rules.is_digit(text[j])) ++j;
      out.push_back({text.substr(i, j - i), mean_position(i, j), i, j,
                     TokenKind::number});
      i = j;
    } else if (rules.is_punct(text[i])) {
      out.push_back({text.substr(i, 1), mean_position(i, i + 1), i, i + 1,
                     TokenKind::punctuation});
      ++i;
    } else {
      ++i;
    }
  }
}

}  // namespace

bool TokenRules::is_letter(char32_t c) const {
  for (const auto& [lo, hi] : letter_ranges) {
    if (c >= lo && c <= hi) return true;
  }
  return false;
}

bool TokenRules::is_punct(char32_t c) const {
  return punct.find(c) != std::u32string::npos;
}

TokenRules TokenRules::defaults() {
  TokenRules r;
  r.letter_ranges = {
      {U'a', U'z'},
      {U'A', U'Z'},
      {0x00C0, 0x024F},  // Latin-1 supplement + extended A/B
      {0x0370, 0x03FF},  // Greek
      {0x0400, 0x04FF},  // Cyrillic
      {0x1100, 0x11FF},  // Hangul jamo
      {0xAC00, 0xD7A3},  // Hangul syllables
  };
  r.punct = U".,;:!?()[]{}'\"«»‹›„“”‘’¡¿…—–-/\\&%§@";
  return r;
}

AxisMap tokenize_cognate_mode(const std::u32string& text,
                              const TokenRules& rules) {
  if (text.empty()) throw EmptyText{};
  AxisMap map;
  map.text_length = text.size();
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (rules.is_letter(text[i])) {
      std::size_t j = i;
      while (j < n && rules.is_letter(text[j])) ++j;
      map.tokens.push_back({fold(text.substr(i, j - i)), mean_position(i, j),
                            i, j, TokenKind::word});
      i = j;
    } else {
      ++i;
    }
  }
  emit_numbers_and_punct(text, rules, map.tokens);
  sort_tokens(map.tokens);
  return map;
}

AxisMap tokenize_lexicon_mode(const std::u32string& text,
                              const std::vector<std::u32string>& vocab,
                              const TokenRules& rules) {
  if (text.empty()) throw EmptyText{};
  AxisMap map;
  map.text_length = text.size();

  std::vector<std::u32string> folded;
  folded.reserve(vocab.size());
  for (const auto& v : vocab) folded.push_back(fold(v));
  std::sort(folded.begin(), folded.end());
  folded.erase(std::unique(folded.begin(), folded.end()), folded.end());

  const std::u32string haystack = fold(text);
  PatternScanner scanner(folded);
  scanner.scan(haystack, [&](std::size_t start, std::size_t end) {
    map.tokens.push_back({haystack.substr(start, end - start),
                          mean_position(start, end), start, end,
                          TokenKind::word});
  });
  emit_numbers_and_punct(text, rules, map.tokens);
  sort_tokens(map.tokens);
  return map;
}

}  // namespace simr
