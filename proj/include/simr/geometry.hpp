#ifndef SIMR_GEOMETRY_HPP
#define SIMR_GEOMETRY_HPP

#include <cmath>
#include <span>

namespace simr {

// The rectangle spanned by the two texts' lengths in characters.  Origin is
// (0,0), terminus is (width,height); the line between them is the main
// diagonal.
struct BitextSpace {
  double width = 0.0;
  double height = 0.0;

  double slope() const { return height / width; }
  double diagonal_angle() const { return std::atan2(height, width); }
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Ordinary least-squares line (y on x) plus the RMS of the fitted points'
// perpendicular distances to it.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_dispersal = 0.0;
  double angle = 0.0;  // arctan(slope), radians
};

// Signed distance from p to the main diagonal; positive above the diagonal.
double perpendicular_distance(const Point& p, const BitextSpace& space);

// Throws DegenerateFit when all x coordinates coincide.
LineFit least_squares_fit(std::span<const Point> points);

}  // namespace simr

#endif
