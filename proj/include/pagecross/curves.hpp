#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "pagecross/error.hpp"

namespace pagecross {

using Pt = std::array<double, 6>;

inline Pt operator+(Pt a, const Pt& b) { for (int i = 0; i < 6; ++i) a[i] += b[i]; return a; }
inline Pt operator-(Pt a, const Pt& b) { for (int i = 0; i < 6; ++i) a[i] -= b[i]; return a; }
inline Pt operator*(double s, Pt a) { for (int i = 0; i < 6; ++i) a[i] *= s; return a; }
inline double dot(const Pt& a, const Pt& b) {
    double s = 0;
    for (int i = 0; i < 6; ++i) s += a[i] * b[i];
    return s;
}
inline double norm(const Pt& a) { return std::sqrt(dot(a, a)); }

// Sampled curve on a uniform parameter grid over [0, 2pi). Ambient space is
// R^3 or R^6; curves on S^3 sit in the z1 = 0 slice of R^6, curves on S^5
// fill all six coordinates.
struct ParamCurve {
    int dim = 3;
    bool closed = true;
    std::vector<Pt> samples;

    size_t size() const { return samples.size(); }
};

// Enforces the sampling invariants: at least 256 samples and consecutive
// chords no longer than 0.1.
void check_curve(const ParamCurve& c);

// Central-difference velocity at sample i with respect to the parameter.
Pt velocity(const ParamCurve& c, size_t i);

// Uniform-stride downsample (keeps every size/target-th sample).
ParamCurve decimate(const ParamCurve& c, size_t target);

ParamCurve sample_curve(int dim, bool closed, size_t n, const std::function<Pt(double)>& f);

// Min distance between sample sets; used for disjointness checks.
double min_pairwise_distance(const ParamCurve& a, const ParamCurve& b);

} // namespace pagecross
