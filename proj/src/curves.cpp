#include "pagecross/curves.hpp"

#include <limits>

namespace pagecross {

void check_curve(const ParamCurve& c) {
    if (c.dim != 3 && c.dim != 6)
        throw Error(Err::DomainMismatch, "curve dimension must be 3 or 6");
    if (c.samples.size() < 256)
        throw Error(Err::ResolutionTooLow, "curve needs at least 256 samples");
    const size_t n = c.samples.size();
    const size_t last = c.closed ? n : n - 1;
    for (size_t i = 0; i < last; ++i) {
        const Pt d = c.samples[(i + 1) % n] - c.samples[i];
        if (norm(d) > 0.1)
            throw Error(Err::ResolutionTooLow, "consecutive samples farther than 0.1 apart");
    }
}

Pt velocity(const ParamCurve& c, size_t i) {
    const size_t n = c.samples.size();
    const double h = 2.0 * M_PI / static_cast<double>(n);
    size_t prev, next;
    if (c.closed) {
        prev = (i + n - 1) % n;
        next = (i + 1) % n;
    } else {
        prev = i == 0 ? 0 : i - 1;
        next = i + 1 == n ? n - 1 : i + 1;
    }
    const double span = h * static_cast<double>(next - prev + (c.closed && next < prev ? n : 0));
    return (1.0 / span) * (c.samples[next] - c.samples[prev]);
}

ParamCurve decimate(const ParamCurve& c, size_t target) {
    if (target == 0 || c.samples.size() <= target) return c;
    const size_t stride = c.samples.size() / target;
    if (stride <= 1) return c;
    ParamCurve out;
    out.dim = c.dim;
    out.closed = c.closed;
    for (size_t i = 0; i < c.samples.size(); i += stride) out.samples.push_back(c.samples[i]);
    return out;
}

ParamCurve sample_curve(int dim, bool closed, size_t n, const std::function<Pt(double)>& f) {
    ParamCurve c;
    c.dim = dim;
    c.closed = closed;
    c.samples.resize(n);
    for (size_t i = 0; i < n; ++i)
        c.samples[i] = f(2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n));
    return c;
}

double min_pairwise_distance(const ParamCurve& a, const ParamCurve& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const Pt& p : a.samples)
        for (const Pt& q : b.samples) {
            double d2 = 0;
            for (int k = 0; k < 6; ++k) {
                const double t = p[k] - q[k];
                d2 += t * t;
            }
            if (d2 < best) best = d2;
        }
    return std::sqrt(best);
}

} // namespace pagecross
