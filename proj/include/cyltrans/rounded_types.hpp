#pragma once

#include <vector>

#include "cyltrans/vec.hpp"

namespace cylt {

// Body known only through its sandwich of concentric balls:
// ball(center, r) inside the body inside ball(center, R).
struct RoundedBody {
  Vec3 center;
  double r = 1.0;
  double R = 1.0;
};

// Lines through a common origin covering a well-rounded family: every body's
// inner ball meets the line of its assigned direction.
struct LineCover {
  Vec3 origin;
  std::vector<Vec3> directions;  // unit; pairwise further than phi apart (mod sign)
  std::vector<int> assignment;   // per body, index into directions
  double phi = 0.0;              // arcsin(1/(2D))
  double D = 1.0;
};

}  // namespace cylt
