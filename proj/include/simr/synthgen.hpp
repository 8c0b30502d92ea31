#ifndef SIMR_SYNTHGEN_HPP
#define SIMR_SYNTHGEN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "simr/evaluation.hpp"

namespace simr {

// Controlled distortions applied to a source text to fabricate a "translated"
// half plus the exact gold map that survives them.
struct DistortionSpec {
  double substitution_rate = 0;  // per-character, letters only, y side
  std::vector<std::pair<std::size_t, std::size_t>> omission_spans;  // x side
  double inversion_rate = 0;     // adjacent word-pair swaps, y side
  double length_jitter = 0;      // relative word-length noise, y side
  std::uint64_t rng_seed = 0;
};

struct SynthBitext {
  std::u32string text_x;
  std::u32string text_y;
  GoldTBM gold;  // word-end TPCs surviving all distortions, plus terminus
  std::vector<std::u32string> segments_x;  // cut at gold points
  std::vector<std::u32string> segments_y;
};

// Throws InvalidSpec on overlapping or out-of-bounds omission spans.
SynthBitext generate(const std::u32string& source, const DistortionSpec& spec);

// Seeded pseudo-text: space-separated pseudo-words drawn from a fixed-size
// vocabulary, at least target_chars characters long.
std::u32string random_source(std::size_t target_chars, std::uint64_t seed);

}  // namespace simr

#endif
