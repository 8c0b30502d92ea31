#ifndef SIMR_EVALUATION_HPP
#define SIMR_EVALUATION_HPP

#include <string>
#include <vector>

#include "simr/search.hpp"

namespace simr {

// Gold-standard points extracted from hand-aligned segment ends, strictly
// increasing in both coordinates.
struct GoldTBM {
  std::vector<Point> tpcs;
};

struct HistBin {
  double lo = 0;  // -inf for the open lower extreme
  double hi = 0;  // +inf for the open upper extreme
  std::size_t count = 0;
  double fraction = 0;
};

struct ErrorReport {
  double rms_error = 0;
  std::vector<double> signed_errors;  // one per TPC, gold order
  std::vector<HistBin> histogram;     // 10-character bins
};

// TPC i is the pair of cumulative segment lengths through segment i.
// Throws SegmentCountMismatch / TextReconstructionMismatch.
GoldTBM load_gold(const std::vector<std::u32string>& segments_x,
                  const std::vector<std::u32string>& segments_y,
                  const std::u32string& text_x, const std::u32string& text_y);

// Signed error per TPC is the vertical residual projected onto the
// diagonal-normal direction; positive when the TPC lies above the map.
ErrorReport rms_perpendicular_error(const BitextMap& map, const GoldTBM& gold,
                                    const BitextSpace& space);

}  // namespace simr

#endif
