#pragma once

#include "pagecross/curves.hpp"

namespace pagecross {

// Gauss double integral by the composite trapezoid rule on the sample
// grids. Curves must be closed, three dimensional and disjoint. The result
// approaches an integer as sampling improves; callers decide what to do
// when |value - round(value)| > 0.25 (PoorConvergence).
double linking_number_gauss(const ParamCurve& a, const ParamCurve& b);

// Signed crossing count of a generic planar projection along `direction`,
// halved. Retries up to 16 perturbed directions when the projection is
// degenerate (near-tangent crossings or an odd sign sum), then throws
// NonGenericProjection. Exact integer.
int linking_number_crossings(const ParamCurve& a, const ParamCurve& b,
                             const std::array<double, 3>& direction);

// Stereographic projection of a curve on the S^3 slice of R^6 from `pole`
// (also on S^3). Frames are oriented consistently so the projected linking
// sign does not depend on the pole.
ParamCurve stereo_project(const ParamCurve& c, const Pt& pole);

// The 16 fixed candidate poles; pick the one farthest from both curves.
Pt choose_pole(const ParamCurve& a, const ParamCurve& b);

} // namespace pagecross
