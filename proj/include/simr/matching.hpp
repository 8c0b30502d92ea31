#ifndef SIMR_MATCHING_HPP
#define SIMR_MATCHING_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simr/axis.hpp"
#include "simr/geometry.hpp"

namespace simr {

// Directional lexicon: entries are (x-side, y-side) surface pairs.
struct TranslationLexicon {
  std::set<std::pair<std::u32string, std::u32string>> entries;

  bool contains(const std::u32string& x, const std::u32string& y) const {
    return entries.count({x, y}) > 0;
  }
  std::vector<std::u32string> x_vocab() const;
  std::vector<std::u32string> y_vocab() const;
};

struct PredicateConfig {
  double lcsr_threshold = 0.71;
  int min_cognate_length = 4;
  bool use_cognates = true;
  bool use_lexicon = false;
  std::set<std::u32string> stop_list_x;
  std::set<std::u32string> stop_list_y;
  std::set<std::pair<std::u32string, std::u32string>> faux_amis;
};

// Longest common subsequence length over the longer string's length.
double lcsr(const std::u32string& a, const std::u32string& b);

// Whether a token pair are likely mutual translations.  Stop lists and faux
// amis veto before any sub-predicate fires.
bool match(const AxisToken& tx, const AxisToken& ty,
           const PredicateConfig& cfg, const TranslationLexicon& lex);

// Closed rectangle in bitext space.
struct Rect {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

  bool contains(const Point& p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
};

// All candidate points whose token pair satisfies the predicate, coordinates
// deduplicated, sorted by (x, y).  Serial reference implementation.
std::vector<Point> generate_points(const Rect& region, const AxisMap& ax,
                                   const AxisMap& ay,
                                   const PredicateConfig& cfg,
                                   const TranslationLexicon& lex);

// Same contract, candidate pairs evaluated in parallel (OpenMP when
// available).  Output is identical to generate_points.
std::vector<Point> generate_points_parallel(const Rect& region,
                                            const AxisMap& ax,
                                            const AxisMap& ay,
                                            const PredicateConfig& cfg,
                                            const TranslationLexicon& lex);

}  // namespace simr

#endif
