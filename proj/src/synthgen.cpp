#include "simr/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "simr/errors.hpp"

namespace simr {

namespace {

// Fixed derangement of a-z so a substituted character always changes but the
// same input character always maps to the same output.
constexpr char32_t kScramble[26] = {
    U'q', U'w', U'e', U'r', U't', U'z', U'u', U'i', U'o', U'p', U's', U'd',
    U'f', U'g', U'h', U'j', U'k', U'l', U'y', U'x', U'c', U'v', U'b', U'n',
    U'm', U'a'};

char32_t scramble(char32_t c) {
  if (c >= U'a' && c <= U'z') {
    const char32_t s = kScramble[c - U'a'];
    return s == c ? (c == U'z' ? U'a' : c + 1) : s;
  }
  if (c >= U'A' && c <= U'Z') {
    return scramble(c + 32) - 32;
  }
  return c;
}

struct WordSpan {
  std::u32string text;
  std::size_t start = 0;
  std::size_t end = 0;
};

}  // namespace

SynthBitext generate(const std::u32string& source,
                     const DistortionSpec& spec) {
  if (source.empty()) throw InvalidSpec("source text is empty");
  if (spec.substitution_rate < 0 || spec.substitution_rate > 1 ||
      spec.inversion_rate < 0 || spec.inversion_rate > 1 ||
      spec.length_jitter < 0)
    throw InvalidSpec("distortion rate out of range");

  auto spans = spec.omission_spans;
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const auto [s, l] = spans[i];
    if (l == 0 || s + l > source.size())
      throw InvalidSpec("omission span out of bounds");
    if (i > 0 && spans[i - 1].first + spans[i - 1].second > s)
      throw InvalidSpec("omission spans overlap");
  }

  // Split into words (maximal non-space runs) and the separators around them.
  std::vector<WordSpan> words;
  std::vector<std::u32string> sep_after;  // separator following word i
  std::u32string prefix;
  {
    std::size_t i = 0;
    const std::size_t n = source.size();
    while (i < n && source[i] == U' ') prefix.push_back(source[i++]);
    while (i < n) {
      WordSpan w;
      w.start = i;
      while (i < n && source[i] != U' ') ++i;
      w.end = i;
      w.text = source.substr(w.start, w.end - w.start);
      words.push_back(std::move(w));
      std::u32string sep;
      while (i < n && source[i] == U' ') sep.push_back(source[i++]);
      sep_after.push_back(std::move(sep));
    }
  }
  if (words.empty()) throw InvalidSpec("source contains no words");
  const std::size_t n_words = words.size();

  std::mt19937_64 rng(spec.rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Adjacent-pair swaps (non-overlapping) in the y ordering.
  std::vector<bool> swapped_first(n_words, false);
  std::vector<std::size_t> slot(n_words);
  for (std::size_t i = 0; i < n_words; ++i) slot[i] = i;
  for (std::size_t i = 0; i + 1 < n_words; ++i) {
    if (unit(rng) < spec.inversion_rate) {
      swapped_first[i] = true;
      std::swap(slot[i], slot[i + 1]);
      ++i;
    }
  }

  // Per-word character substitutions and length jitter.
  std::vector<std::u32string> transformed(n_words);
  for (std::size_t i = 0; i < n_words; ++i) {
    std::u32string t = words[i].text;
    for (auto& c : t) {
      if (unit(rng) < spec.substitution_rate) c = scramble(c);
    }
    if (spec.length_jitter > 0) {
      const double factor =
          1.0 + (2.0 * unit(rng) - 1.0) * spec.length_jitter;
      const std::size_t len = std::max<std::size_t>(
          1, static_cast<std::size_t>(
                 std::lround(static_cast<double>(t.size()) * factor)));
      if (len < t.size())
        t.resize(len);
      else
        t.append(len - t.size(), t.back());
    }
    transformed[i] = std::move(t);
  }

  // Assemble y and record the end position of each slot's word.
  SynthBitext out;
  out.text_y = prefix;
  std::vector<double> y_end(n_words);
  for (std::size_t s = 0; s < n_words; ++s) {
    out.text_y += transformed[slot[s]];
    y_end[s] = static_cast<double>(out.text_y.size());
    out.text_y += sep_after[s];
  }

  // Delete the omission spans from the x side.
  auto deleted_before = [&spans](std::size_t q) {
    std::size_t d = 0;
    for (const auto& [s, l] : spans) {
      if (s >= q) break;
      d += std::min(l, q - s);
    }
    return d;
  };
  {
    out.text_x = source;
    for (auto it = spans.rbegin(); it != spans.rend(); ++it)
      out.text_x.erase(it->first, it->second);
  }

  // Gold TPCs at word ends: word i's end survives when the prefix of words
  // through i maps to a y prefix (not the first half of a swapped pair) and
  // no omission touches the word.
  for (std::size_t i = 0; i < n_words; ++i) {
    if (swapped_first[i]) continue;
    bool omitted = false;
    for (const auto& [s, l] : spans) {
      if (s < words[i].end && s + l > words[i].start) {
        omitted = true;
        break;
      }
    }
    if (omitted) continue;
    const double x =
        static_cast<double>(words[i].end - deleted_before(words[i].end));
    const double y = y_end[i];
    if (!out.gold.tpcs.empty() &&
        (out.gold.tpcs.back().x >= x || out.gold.tpcs.back().y >= y))
      continue;
    out.gold.tpcs.push_back({x, y});
  }
  // Close with the terminus so segment files reproduce the texts exactly.
  const Point terminus{static_cast<double>(out.text_x.size()),
                       static_cast<double>(out.text_y.size())};
  if (out.gold.tpcs.empty() || (out.gold.tpcs.back().x < terminus.x &&
                                out.gold.tpcs.back().y < terminus.y)) {
    out.gold.tpcs.push_back(terminus);
  } else if (out.gold.tpcs.back().x != terminus.x ||
             out.gold.tpcs.back().y != terminus.y) {
    out.gold.tpcs.back() = terminus;
  }

  // Segment files in the evaluation format: cuts at the gold points.
  std::size_t px = 0, py = 0;
  for (const Point& tpc : out.gold.tpcs) {
    const std::size_t cx = static_cast<std::size_t>(tpc.x);
    const std::size_t cy = static_cast<std::size_t>(tpc.y);
    out.segments_x.push_back(out.text_x.substr(px, cx - px));
    out.segments_y.push_back(out.text_y.substr(py, cy - py));
    px = cx;
    py = cy;
  }
  return out;
}

std::u32string random_source(std::size_t target_chars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> word_len(4, 10);
  std::uniform_int_distribution<int> letter(0, 25);

  constexpr std::size_t kVocabSize = 600;
  std::vector<std::u32string> vocab;
  vocab.reserve(kVocabSize);
  for (std::size_t i = 0; i < kVocabSize; ++i) {
    std::u32string w;
    const int len = word_len(rng);
    for (int k = 0; k < len; ++k)
      w.push_back(static_cast<char32_t>(U'a' + letter(rng)));
    vocab.push_back(std::move(w));
  }

  std::uniform_int_distribution<std::size_t> pick(0, kVocabSize - 1);
  std::u32string text;
  text.reserve(target_chars + 16);
  while (text.size() < target_chars) {
    if (!text.empty()) text.push_back(U' ');
    text += vocab[pick(rng)];
  }
  return text;
}

}  // namespace simr
