#include "simr/geometry.hpp"

#include <cassert>

#include "simr/errors.hpp"

namespace simr {

double perpendicular_distance(const Point& p, const BitextSpace& space) {
  return (p.y * space.width - p.x * space.height) /
         std::hypot(space.width, space.height);
}

LineFit least_squares_fit(std::span<const Point> points) {
  assert(points.size() >= 2);
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const Point& p : points) {
    sx += p.x;
    sy += p.y;
    sxx += p.x * p.x;
    sxy += p.x * p.y;
  }
  const double var_x = sxx - sx * sx / n;
  if (var_x <= 0.0) throw DegenerateFit{};
  const double cov_xy = sxy - sx * sy / n;

  LineFit fit;
  fit.slope = cov_xy / var_x;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.angle = std::atan(fit.slope);

  // Perpendicular distance to y = slope*x + intercept is the vertical
  // residual scaled by cos(angle).
  const double scale = 1.0 / std::sqrt(1.0 + fit.slope * fit.slope);
  double ss = 0;
  for (const Point& p : points) {
    const double r = (p.y - (fit.slope * p.x + fit.intercept)) * scale;
    ss += r * r;
  }
  fit.rms_dispersal = std::sqrt(ss / n);
  return fit;
}

}  // namespace simr
