#include "simr/search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace simr {

double interpolate(const BitextMap& map, double x) {
  const auto& pts = map.points;
  assert(pts.size() >= 2);
  auto hi = std::lower_bound(pts.begin(), pts.end(), x,
                             [](const Point& p, double v) { return p.x < v; });
  if (hi == pts.begin()) return pts.front().y;
  if (hi == pts.end()) return pts.back().y;
  if (hi->x == x) return hi->y;
  const Point& a = *(hi - 1);
  const Point& b = *hi;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

BitextMap assemble_map(std::vector<Chain> chains, const BitextSpace& space) {
  BitextMap map;
  map.space = space;

  std::vector<Point> pts;
  for (const Chain& c : chains) {
    pts.insert(pts.end(), c.points.begin(), c.points.end());
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Interior points only; anything touching the boundary cannot coexist with
  // the origin/terminus under strict bi-monotonicity.
  std::vector<Point> interior;
  for (const Point& p : pts) {
    if (p.x > 0 && p.x < space.width && p.y > 0 && p.y < space.height)
      interior.push_back(p);
  }
  std::size_t dropped = pts.size() - interior.size();

  // Longest strictly-increasing subsequence in y over points sorted by
  // (x asc, y desc); strict in y then implies strict in x as well.
  std::sort(interior.begin(), interior.end(),
            [](const Point& a, const Point& b) {
              return a.x != b.x ? a.x < b.x : a.y > b.y;
            });
  const std::size_t n = interior.size();
  std::vector<std::size_t> tail_index;   // index of smallest tail per length
  std::vector<std::size_t> parent(n, n);
  std::vector<double> tails;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::lower_bound(tails.begin(), tails.end(), interior[i].y);
    const std::size_t len = static_cast<std::size_t>(it - tails.begin());
    if (len > 0) parent[i] = tail_index[len - 1];
    if (it == tails.end()) {
      tails.push_back(interior[i].y);
      tail_index.push_back(i);
    } else {
      *it = interior[i].y;
      tail_index[len] = i;
    }
  }
  std::vector<Point> kept;
  if (!tails.empty()) {
    for (std::size_t i = tail_index.back(); i != n; i = parent[i])
      kept.push_back(interior[i]);
    std::reverse(kept.begin(), kept.end());
  }
  dropped += n - kept.size();

  map.points.push_back({0.0, 0.0});
  map.points.insert(map.points.end(), kept.begin(), kept.end());
  map.points.push_back({space.width, space.height});
  map.chains = std::move(chains);
  map.discarded = dropped;
  return map;
}

BitextMap run_search(const AxisMap& ax, const AxisMap& ay,
                     const SimrParams& params, const SearchConfig& cfg,
                     const PredicateConfig& pred,
                     const TranslationLexicon& lex) {
  const BitextSpace space{static_cast<double>(ax.text_length),
                          static_cast<double>(ay.text_length)};
  const double slope = space.slope();
  auto generate = cfg.parallel_generation ? generate_points_parallel
                                          : generate_points;

  std::vector<Chain> accepted;
  Point anchor{0.0, 0.0};
  while (anchor.x < space.width && anchor.y < space.height) {
    double w = cfg.initial_width;
    bool found = false;
    bool exhausted_space = false;
    for (int expansion = 0; expansion <= cfg.max_expansions; ++expansion) {
      if (expansion > 0) w *= cfg.growth_factor;
      Rect rect{anchor.x, anchor.y, std::min(anchor.x + w, space.width),
                std::min(anchor.y + w * slope, space.height)};
      const auto raw = generate(rect, ax, ay, pred, lex);
      const auto filtered = filter_noise(raw, params.max_point_ambiguity);
      const auto chains = find_chains(filtered, params, space);
      if (!chains.empty()) {
        const Chain& best = best_chain(chains, space);
        anchor = best.anchor_corner;
        accepted.push_back(best);
        found = true;
        break;
      }
      if (rect.x1 >= space.width && rect.y1 >= space.height) {
        exhausted_space = true;
        break;
      }
    }
    if (!found) {
      if (exhausted_space) break;
      // Dead signal: slide the anchor along the diagonal and start over with
      // a fresh rectangle.
      anchor.x += w;
      anchor.y += w * slope;
    }
  }
  return assemble_map(std::move(accepted), space);
}

}  // namespace simr
