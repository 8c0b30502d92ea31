#include "simr/matching.hpp"

#include <algorithm>
#include <cassert>

namespace simr {

namespace {

// Tokens with position in [lo, hi], by binary search on the sorted axis.
std::pair<std::size_t, std::size_t> position_range(const AxisMap& axis,
                                                   double lo, double hi) {
  const auto& t = axis.tokens;
  auto first = std::lower_bound(
      t.begin(), t.end(), lo,
      [](const AxisToken& tok, double v) { return tok.position < v; });
  auto last = std::upper_bound(
      t.begin(), t.end(), hi,
      [](double v, const AxisToken& tok) { return v < tok.position; });
  return {static_cast<std::size_t>(first - t.begin()),
          static_cast<std::size_t>(last - t.begin())};
}

void sort_dedupe(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

std::vector<std::u32string> TranslationLexicon::x_vocab() const {
  std::vector<std::u32string> v;
  for (const auto& [x, y] : entries) v.push_back(x);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::u32string> TranslationLexicon::y_vocab() const {
  std::vector<std::u32string> v;
  for (const auto& [x, y] : entries) v.push_back(y);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

double lcsr(const std::u32string& a, const std::u32string& b) {
  assert(!a.empty() && !b.empty());
  const std::size_t n = a.size(), m = b.size();
  // Two-row LCS table.
  std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[m]) / static_cast<double>(std::max(n, m));
}

bool match(const AxisToken& tx, const AxisToken& ty,
           const PredicateConfig& cfg, const TranslationLexicon& lex) {
  if (cfg.stop_list_x.count(tx.surface) || cfg.stop_list_y.count(ty.surface))
    return false;
  if (cfg.faux_amis.count({tx.surface, ty.surface})) return false;

  if (tx.kind != TokenKind::word && tx.kind == ty.kind &&
      tx.surface == ty.surface)
    return true;
  if (cfg.use_cognates && tx.kind == TokenKind::word &&
      ty.kind == TokenKind::word &&
      tx.surface.size() >= static_cast<std::size_t>(cfg.min_cognate_length) &&
      ty.surface.size() >= static_cast<std::size_t>(cfg.min_cognate_length) &&
      lcsr(tx.surface, ty.surface) >= cfg.lcsr_threshold)
    return true;
  if (cfg.use_lexicon && lex.contains(tx.surface, ty.surface)) return true;
  return false;
}

std::vector<Point> generate_points(const Rect& region, const AxisMap& ax,
                                   const AxisMap& ay,
                                   const PredicateConfig& cfg,
                                   const TranslationLexicon& lex) {
  const auto [xb, xe] = position_range(ax, region.x0, region.x1);
  const auto [yb, ye] = position_range(ay, region.y0, region.y1);
  std::vector<Point> pts;
  for (std::size_t i = xb; i < xe; ++i) {
    for (std::size_t j = yb; j < ye; ++j) {
      if (match(ax.tokens[i], ay.tokens[j], cfg, lex)) {
        pts.push_back({ax.tokens[i].position, ay.tokens[j].position});
      }
    }
  }
  sort_dedupe(pts);
  return pts;
}

std::vector<Point> generate_points_parallel(const Rect& region,
                                            const AxisMap& ax,
                                            const AxisMap& ay,
                                            const PredicateConfig& cfg,
                                            const TranslationLexicon& lex) {
  const auto [xb, xe] = position_range(ax, region.x0, region.x1);
  const auto [yb, ye] = position_range(ay, region.y0, region.y1);
  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(xe - xb);
  std::vector<std::vector<Point>> per_row(static_cast<std::size_t>(nx));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < nx; ++r) {
    const std::size_t i = xb + static_cast<std::size_t>(r);
    for (std::size_t j = yb; j < ye; ++j) {
      if (match(ax.tokens[i], ay.tokens[j], cfg, lex)) {
        per_row[static_cast<std::size_t>(r)].push_back(
            {ax.tokens[i].position, ay.tokens[j].position});
      }
    }
  }
  std::vector<Point> pts;
  for (const auto& row : per_row) pts.insert(pts.end(), row.begin(), row.end());
  sort_dedupe(pts);
  return pts;
}

}  // namespace simr
