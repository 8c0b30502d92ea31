#include "simr/evaluation.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "simr/errors.hpp"

namespace simr {

GoldTBM load_gold(const std::vector<std::u32string>& segments_x,
                  const std::vector<std::u32string>& segments_y,
                  const std::u32string& text_x, const std::u32string& text_y) {
  if (segments_x.size() != segments_y.size())
    throw SegmentCountMismatch(segments_x.size(), segments_y.size());

  std::u32string rebuilt_x, rebuilt_y;
  for (const auto& s : segments_x) rebuilt_x += s;
  for (const auto& s : segments_y) rebuilt_y += s;
  if (rebuilt_x != text_x) throw TextReconstructionMismatch("x");
  if (rebuilt_y != text_y) throw TextReconstructionMismatch("y");

  GoldTBM gold;
  double cx = 0, cy = 0;
  for (std::size_t i = 0; i < segments_x.size(); ++i) {
    cx += static_cast<double>(segments_x[i].size());
    cy += static_cast<double>(segments_y[i].size());
    // Zero-length pairs would repeat the previous TPC; keep the set strict.
    if (!gold.tpcs.empty() &&
        (gold.tpcs.back().x >= cx || gold.tpcs.back().y >= cy))
      continue;
    gold.tpcs.push_back({cx, cy});
  }
  return gold;
}

ErrorReport rms_perpendicular_error(const BitextMap& map, const GoldTBM& gold,
                                    const BitextSpace& space) {
  if (gold.tpcs.empty()) throw EmptyGold{};

  ErrorReport report;
  const double scale =
      space.width / std::hypot(space.width, space.height);
  double sum_sq = 0;
  std::map<long, std::size_t> bins;
  for (const Point& tpc : gold.tpcs) {
    const double e = (tpc.y - interpolate(map, tpc.x)) * scale;
    report.signed_errors.push_back(e);
    sum_sq += e * e;
    ++bins[static_cast<long>(std::floor(e / 10.0))];
  }
  const double n = static_cast<double>(gold.tpcs.size());
  report.rms_error = std::sqrt(sum_sq / n);

  for (auto it = bins.begin(); it != bins.end(); ++it) {
    HistBin bin;
    bin.lo = static_cast<double>(it->first) * 10.0;
    bin.hi = bin.lo + 10.0;
    if (it == bins.begin())
      bin.lo = -std::numeric_limits<double>::infinity();
    if (std::next(it) == bins.end())
      bin.hi = std::numeric_limits<double>::infinity();
    bin.count = it->second;
    bin.fraction = static_cast<double>(it->second) / n;
    report.histogram.push_back(bin);
  }
  return report;
}

}  // namespace simr
