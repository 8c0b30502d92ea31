#ifndef SIMR_SEARCH_HPP
#define SIMR_SEARCH_HPP

#include <vector>

#include "simr/matching.hpp"
#include "simr/recognizer.hpp"

namespace simr {

struct SearchConfig {
  double initial_width = 20.0;  // characters
  double growth_factor = 1.5;
  int max_expansions = 50;
  bool parallel_generation = false;  // OpenMP candidate generation
};

// The accepted, injective, monotone point set.  points always starts at the
// origin and ends at the terminus; chains keep full provenance, including
// any non-monotonic points dropped from the interpolable map.
struct BitextMap {
  BitextSpace space;
  std::vector<Point> points;
  std::vector<Chain> chains;
  std::size_t discarded = 0;

  bool degenerate() const { return chains.empty(); }
};

// Piecewise-linear y at x; exact at map points.
double interpolate(const BitextMap& map, double x);

// Origin + terminus + the largest strictly bi-monotone subset of the chains'
// points (longest increasing subsequence on the x-sorted points).
BitextMap assemble_map(std::vector<Chain> chains, const BitextSpace& space);

// The expanding-rectangle trace: generate, filter, recognize, expand on
// failure, re-anchor at the accepted chain's top right corner.  A map with
// zero chains signals that the predicate produced no usable signal.
BitextMap run_search(const AxisMap& ax, const AxisMap& ay,
                     const SimrParams& params, const SearchConfig& cfg,
                     const PredicateConfig& pred,
                     const TranslationLexicon& lex);

}  // namespace simr

#endif
