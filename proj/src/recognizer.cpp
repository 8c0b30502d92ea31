#include "simr/recognizer.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "simr/errors.hpp"

namespace simr {

namespace {

std::unordered_map<double, int> count_by(std::span<const Point> pts,
                                         double Point::* coord) {
  std::unordered_map<double, int> counts;
  counts.reserve(pts.size());
  for (const Point& p : pts) ++counts[p.*coord];
  return counts;
}

// Projection onto the main-diagonal direction, up to a positive factor.
double diagonal_key(const Point& p, const BitextSpace& space) {
  return p.x + p.y * space.width / space.height;
}

bool injective(std::span<const Point> window) {
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      if (window[i].x == window[j].x || window[i].y == window[j].y)
        return false;
    }
  }
  return true;
}

}  // namespace

int ambiguity_level(const Point& p, std::span<const Point> points_in_rect) {
  int col = 0, row = 0;
  for (const Point& q : points_in_rect) {
    if (q.x == p.x) ++col;
    if (q.y == p.y) ++row;
  }
  return col + row - 2;
}

std::vector<Point> filter_noise(std::span<const Point> points,
                                int max_ambiguity) {
  const auto cols = count_by(points, &Point::x);
  const auto rows = count_by(points, &Point::y);
  std::vector<Point> kept;
  kept.reserve(points.size());
  for (const Point& p : points) {
    if (cols.at(p.x) + rows.at(p.y) - 2 <= max_ambiguity) kept.push_back(p);
  }
  return kept;
}

std::vector<Chain> find_chains(std::span<const Point> points,
                               const SimrParams& params,
                               const BitextSpace& space) {
  std::vector<Chain> chains;
  const std::size_t k = static_cast<std::size_t>(params.chain_size);
  if (points.size() < k) return chains;

  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [&space](const Point& a, const Point& b) {
              const double ka = diagonal_key(a, space);
              const double kb = diagonal_key(b, space);
              if (ka != kb) return ka < kb;
              return a.x != b.x ? a.x < b.x : a.y < b.y;
            });

  const double diag_angle = space.diagonal_angle();
  for (std::size_t i = 0; i + k <= sorted.size(); ++i) {
    const std::span<const Point> window(sorted.data() + i, k);
    if (!injective(window)) continue;
    LineFit fit;
    try {
      fit = least_squares_fit(window);
    } catch (const DegenerateFit&) {
      continue;
    }
    if (fit.rms_dispersal > params.max_point_dispersal) continue;
    if (std::abs(fit.angle - diag_angle) > params.max_angle_deviation)
      continue;
    Chain c;
    c.points.assign(window.begin(), window.end());
    c.fit = fit;
    c.anchor_corner = window[0];
    for (const Point& p : window) {
      c.anchor_corner.x = std::max(c.anchor_corner.x, p.x);
      c.anchor_corner.y = std::max(c.anchor_corner.y, p.y);
    }
    chains.push_back(std::move(c));
  }
  return chains;
}

const Chain& best_chain(std::span<const Chain> chains,
                        const BitextSpace& space) {
  if (chains.empty()) throw EmptyChainSet{};
  const double diag_angle = space.diagonal_angle();
  const Chain* best = &chains[0];
  for (const Chain& c : chains.subspan(1)) {
    if (c.fit.rms_dispersal != best->fit.rms_dispersal) {
      if (c.fit.rms_dispersal < best->fit.rms_dispersal) best = &c;
      continue;
    }
    const double dc = std::abs(c.fit.angle - diag_angle);
    const double db = std::abs(best->fit.angle - diag_angle);
    if (dc != db) {
      if (dc < db) best = &c;
      continue;
    }
    if (c.anchor_corner.x < best->anchor_corner.x) best = &c;
  }
  return *best;
}

}  // namespace simr
