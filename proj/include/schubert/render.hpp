#pragma once

#include <string>

#include "schubert/sepdesc.hpp"

namespace schubert {

// Standalone SVG: one unit cell per tile on a light grid, pipes drawn with
// straight segments and quarter-circle arcs, window indices in the margin.
std::string bpd_to_svg(const Bpd& d);
// Same, with marked blanks shaded.
std::string marked_bpd_to_svg(const MarkedBpd& m);

} // namespace schubert
