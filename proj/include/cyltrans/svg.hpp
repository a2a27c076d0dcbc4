#pragma once

#include <string>
#include <vector>

#include "cyltrans/piercing.hpp"

namespace cylt {

// Diagnostic picture of a piercing construction: the polygon, the minimal
// slab's midline, the anchors and rectangle points, and any slabs the
// sampling oracle found unpierced. Viewport is the polygon's bounding box
// inflated by twice the width; fixed palette and number format keep the
// output byte-stable for identical inputs.
std::string render_piercing_svg(const ConvexPolygon& poly, const PiercingSet& pierce,
                                const std::vector<Slab2>& failures);

}  // namespace cylt
