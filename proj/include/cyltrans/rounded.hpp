#pragma once

#include "cyltrans/planar.hpp"
#include "cyltrans/rounded_types.hpp"

namespace cylt {

// arcsin(1/(2D)) in radians; D >= 1.
double phi_angle(double D);

// Greedy direction net through the center of the minimal-r body: a body whose
// center direction is within phi of an existing line reuses it, otherwise its
// exact direction is appended. At most 32*D^2 directions by the cap-packing
// bound. `lenient` relaxes the per-body distance precondition from
// |a| <= D + R to the weaker |a| <= 2*D*r implied by it (both after
// normalizing the minimal inner radius to 1).
LineCover cover_lines(const std::vector<RoundedBody>& bodies, double D,
                      bool lenient = false, double eps = kEps);

// True iff every body's inner ball meets its assigned line, the direction
// count respects 32*D^2, and directions are pairwise more than phi - eps
// apart (mod sign).
bool verify_cover(const std::vector<RoundedBody>& bodies, const LineCover& cover, double eps = kEps);

}  // namespace cylt
