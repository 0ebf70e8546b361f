#pragma once

#include "pagecross/curves.hpp"
#include "pagecross/front.hpp"

namespace pagecross {

// Legendrian lift of a closed front component into (R^3, ker(dz + x dy)):
// the front is drawn with smooth piecewise-polynomial strands and the lift
// takes x = -dz/dy along it, so the sampled curve is Legendrian up to
// finite-difference error. `resolution` is the sample count per geometric
// piece (>= 64).
ParamCurve legendrian_lift(const FrontDiagram& d, int component, int resolution = 1024);

} // namespace pagecross
