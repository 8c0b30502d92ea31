#ifndef SIMR_RECOGNIZER_HPP
#define SIMR_RECOGNIZER_HPP

#include <span>
#include <vector>

#include "simr/geometry.hpp"

namespace simr {

// The four parameters re-optimized per language pair.
struct SimrParams {
  int chain_size = 6;
  double max_point_dispersal = 15.0;           // characters
  double max_angle_deviation = 10.0 * 3.14159265358979323846 / 180.0;  // rad
  int max_point_ambiguity = 1;
};

struct Chain {
  std::vector<Point> points;
  LineFit fit;
  Point anchor_corner;  // (max x, max y) over points
};

// X + Y - 2, where X and Y count points sharing p's column and row within
// the current rectangle's point set.
int ambiguity_level(const Point& p, std::span<const Point> points_in_rect);

// Points whose ambiguity level (against the full input set) stays within
// max_ambiguity.  One pass; levels are not recomputed after removal.
std::vector<Point> filter_noise(std::span<const Point> points,
                                int max_ambiguity);

// Sliding windows of chain_size points in main-diagonal projection order,
// kept when injective, tight enough, and parallel enough to the diagonal.
std::vector<Chain> find_chains(std::span<const Point> points,
                               const SimrParams& params,
                               const BitextSpace& space);

// Least-dispersed chain; ties broken by angle deviation, then anchor x.
const Chain& best_chain(std::span<const Chain> chains,
                        const BitextSpace& space);

}  // namespace simr

#endif
