#include "pagecross/contact_forms.hpp"

#include <cmath>

namespace pagecross {

const char* form_name(FormKind f) {
    switch (f) {
    case FormKind::StandardR3: return "standard_R3";
    case FormKind::StandardR5: return "standard_R5";
    case FormKind::Alpha5Polar: return "alpha5_polar";
    case FormKind::Alpha3Cartesian: return "alpha3_cartesian";
    }
    return "?";
}

double form_eval(FormKind f, const Pt& p, const Pt& t) {
    switch (f) {
    case FormKind::StandardR3:
        // coords (x, y, z)
        return t[2] + p[0] * t[1];
    case FormKind::StandardR5:
        // coords (x1, y1, x2, y2, z)
        return t[4] + p[0] * t[1] + p[2] * t[3];
    case FormKind::Alpha5Polar:
        return (p[0] * t[1] - p[1] * t[0]) + (p[2] * t[3] - p[3] * t[2]) + (p[4] * t[5] - p[5] * t[4]);
    case FormKind::Alpha3Cartesian:
        return (p[2] * t[3] - p[3] * t[2]) + (p[4] * t[5] - p[5] * t[4]);
    }
    return 0;
}

Pt reeb_field(FormKind f, const Pt& p) {
    switch (f) {
    case FormKind::StandardR3:
        return Pt{0, 0, 1, 0, 0, 0};
    case FormKind::StandardR5:
        return Pt{0, 0, 0, 0, 1, 0};
    case FormKind::Alpha5Polar:
        return Pt{-p[1], p[0], -p[3], p[2], -p[5], p[4]};
    case FormKind::Alpha3Cartesian:
        return Pt{0, 0, -p[3], p[2], -p[5], p[4]};
    }
    return Pt{};
}

bool reeb_domain_ok(FormKind f, const Pt& p, double tol) {
    switch (f) {
    case FormKind::StandardR3:
    case FormKind::StandardR5:
        return true;
    case FormKind::Alpha5Polar:
        return std::abs(norm(p) - 1.0) <= tol;
    case FormKind::Alpha3Cartesian:
        return std::abs(p[0]) <= tol && std::abs(p[1]) <= tol && std::abs(norm(p) - 1.0) <= tol;
    }
    return false;
}

int form_curve_dim(FormKind f) {
    return f == FormKind::StandardR3 ? 3 : 6;
}

double dalpha_eval(FormKind f, const Pt& p, const Pt& u, const Pt& v, double h) {
    // d(alpha)(u, v) = D_u[alpha(.)(v)] - D_v[alpha(.)(u)] for coordinate
    // extensions of constant u, v.
    const double du = (form_eval(f, p + h * u, v) - form_eval(f, p - h * u, v)) / (2 * h);
    const double dv = (form_eval(f, p + h * v, u) - form_eval(f, p - h * v, u)) / (2 * h);
    return du - dv;
}

double isotropy_residual(const ParamCurve& c, FormKind f) {
    if (c.dim != form_curve_dim(f))
        throw Error(Err::DomainMismatch, std::string("curve dim ") + std::to_string(c.dim) +
                                             " under " + form_name(f));
    double worst = 0;
    for (size_t i = 0; i < c.samples.size(); ++i) {
        const double r = std::abs(form_eval(f, c.samples[i], velocity(c, i)));
        if (r > worst) worst = r;
    }
    return worst;
}

ParamCurve reeb_pushoff(const ParamCurve& c, FormKind f, double eps) {
    if (eps <= 0)
        throw Error(Err::CollisionDetected, "pushoff distance must be positive");
    if (eps > 0.05)
        throw Error(Err::DomainMismatch, "pushoff epsilon above 0.05");
    if (c.dim != form_curve_dim(f))
        throw Error(Err::DomainMismatch, "curve dimension mismatch for pushoff");

    const bool spherical = (f == FormKind::Alpha5Polar || f == FormKind::Alpha3Cartesian);
    ParamCurve out = c;
    for (size_t i = 0; i < c.samples.size(); ++i) {
        const Pt& p = c.samples[i];
        if (!reeb_domain_ok(f, p))
            throw Error(Err::DomainMismatch, "sample off the Reeb domain of " + std::string(form_name(f)));
        Pt q = p + eps * reeb_field(f, p);
        if (spherical) q = (1.0 / norm(q)) * q;
        out.samples[i] = q;
    }
    if (min_pairwise_distance(c, out) <= eps / 2)
        throw Error(Err::CollisionDetected, "pushoff not separated from the curve");
    return out;
}

} // namespace pagecross
