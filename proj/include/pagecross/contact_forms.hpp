#pragma once

#include "pagecross/curves.hpp"

namespace pagecross {

// The four named contact forms the library evaluates numerically.
//
//   StandardR3     dz + x dy                on R^3, coords (x, y, z)
//   StandardR5     dz + x1 dy1 + x2 dy2     on R^5, coords (x1,y1,x2,y2,z)
//   Alpha5Polar    r1^2 dth1 + r2^2 dth2 + r3^2 dth3 restricted to S^5,
//                  evaluated in Cartesian form sum(x_i dy_i - y_i dx_i)
//   Alpha3Cartesian x2 dy2 - y2 dx2 + x3 dy3 - y3 dx3 (the S^3 slice form)
enum class FormKind { StandardR3, StandardR5, Alpha5Polar, Alpha3Cartesian };

const char* form_name(FormKind f);

// alpha(point)(tangent). Points use the first 3, 5 or 6 coordinates of Pt
// depending on the form.
double form_eval(FormKind f, const Pt& point, const Pt& tangent);

// Reeb vector field at a point. For the sphere forms the point must lie on
// the sphere (and in the z1 = 0 slice for Alpha3Cartesian).
Pt reeb_field(FormKind f, const Pt& point);

// Whether the point lies in the domain where the Reeb field of f is the
// contact Reeb field (sphere membership for the restricted forms).
bool reeb_domain_ok(FormKind f, const Pt& point, double tol = 1e-7);

int form_curve_dim(FormKind f); // ambient curve dimension the form expects

// d(alpha) at p applied to (u, v), via central finite differences of the
// coefficient functions.
double dalpha_eval(FormKind f, const Pt& p, const Pt& u, const Pt& v, double h = 1e-5);

// max_i |alpha(velocity_i)| over the curve, velocities by central
// differences. Legendrian curves have residual ~ 0.
double isotropy_residual(const ParamCurve& c, FormKind f);

// Pointwise pushoff c + eps * Reeb, reprojected to the sphere for the
// restricted forms. Throws CollisionDetected when the result comes within
// eps/2 of the original curve (or eps <= 0).
ParamCurve reeb_pushoff(const ParamCurve& c, FormKind f, double eps);

} // namespace pagecross
