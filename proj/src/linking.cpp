#include "pagecross/linking.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#include "pagecross/parallel.hpp"

namespace pagecross {

namespace {

struct V3 {
    double x = 0, y = 0, z = 0;
};
inline V3 v3(const Pt& p) { return {p[0], p[1], p[2]}; }
inline V3 sub(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double det3(V3 a, V3 b, V3 c) {
    return a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
           a.z * (b.x * c.y - b.y * c.x);
}

} // namespace

double linking_number_gauss(const ParamCurve& a, const ParamCurve& b) {
    if (a.dim != 3 || b.dim != 3)
        throw Error(Err::DomainMismatch, "Gauss integral needs curves in R^3");
    if (!a.closed || !b.closed)
        throw Error(Err::NotClosed, "Gauss integral needs closed curves");
    const size_t n = a.samples.size(), m = b.samples.size();
    const double ha = 2 * M_PI / static_cast<double>(n);
    const double hb = 2 * M_PI / static_cast<double>(m);

    std::vector<V3> av(n), at(n), bv(m), bt(m);
    for (size_t i = 0; i < n; ++i) {
        av[i] = v3(a.samples[i]);
        at[i] = v3(velocity(a, i));
    }
    for (size_t j = 0; j < m; ++j) {
        bv[j] = v3(b.samples[j]);
        bt[j] = v3(velocity(b, j));
    }

    std::vector<double> partial(n, 0.0);
    std::atomic<bool> touching{false};
    parallel_for(n, [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            double acc = 0;
            for (size_t j = 0; j < m; ++j) {
                const V3 d = sub(av[i], bv[j]);
                const double r2 = d.x * d.x + d.y * d.y + d.z * d.z;
                if (r2 < 1e-14) { touching.store(true); return; }
                acc += det3(at[i], bt[j], d) / (r2 * std::sqrt(r2));
            }
            partial[i] = acc;
        }
    });
    if (touching.load())
        throw Error(Err::CurvesIntersect, "curves touch within tolerance");
    double sum = 0;
    for (double p : partial) sum += p;
    return sum * ha * hb / (4 * M_PI);
}

namespace {

struct Frame {
    V3 u, v, w;
};

Frame projection_frame(const std::array<double, 3>& direction) {
    V3 w{direction[0], direction[1], direction[2]};
    const double len = std::sqrt(w.x * w.x + w.y * w.y + w.z * w.z);
    if (len < 1e-12) throw Error(Err::NonGenericProjection, "zero projection direction");
    w = {w.x / len, w.y / len, w.z / len};
    V3 h = std::abs(w.x) < 0.9 ? V3{1, 0, 0} : V3{0, 1, 0};
    V3 u{h.y * w.z - h.z * w.y, h.z * w.x - h.x * w.z, h.x * w.y - h.y * w.x};
    const double ul = std::sqrt(u.x * u.x + u.y * u.y + u.z * u.z);
    u = {u.x / ul, u.y / ul, u.z / ul};
    const V3 v{w.y * u.z - w.z * u.y, w.z * u.x - w.x * u.z, w.x * u.y - w.y * u.x};
    return {u, v, w}; // det[u, v, w] = +1
}

// One attempt at the signed crossing count. Returns false when the
// projection looks degenerate for this direction.
bool crossing_sum(const ParamCurve& a, const ParamCurve& b, const Frame& f, long& out_sum) {
    const size_t n = a.samples.size(), m = b.samples.size();
    struct P2 {
        double x, y, d;
    };
    std::vector<P2> pa(n + 1), pb(m + 1);
    auto proj = [&](const Pt& s) -> P2 {
        const V3 p = v3(s);
        return {p.x * f.u.x + p.y * f.u.y + p.z * f.u.z,
                p.x * f.v.x + p.y * f.v.y + p.z * f.v.z,
                p.x * f.w.x + p.y * f.w.y + p.z * f.w.z};
    };
    for (size_t i = 0; i <= n; ++i) pa[i] = proj(a.samples[i % n]);
    for (size_t j = 0; j <= m; ++j) pb[j] = proj(b.samples[j % m]);

    std::atomic<bool> degenerate{false};
    std::vector<long> partial(n, 0);
    parallel_for(n, [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi && !degenerate.load(std::memory_order_relaxed); ++i) {
            const double ax = pa[i].x, ay = pa[i].y;
            const double rx = pa[i + 1].x - ax, ry = pa[i + 1].y - ay;
            long acc = 0;
            for (size_t j = 0; j < m; ++j) {
                const double bx = pb[j].x, by = pb[j].y;
                const double sx = pb[j + 1].x - bx, sy = pb[j + 1].y - by;
                const double den = rx * sy - ry * sx;
                const double qx = bx - ax, qy = by - ay;
                const double tnum = qx * sy - qy * sx;
                const double unum = qx * ry - qy * rx;
                if (std::abs(den) < 1e-13) {
                    // parallel segments: degenerate only if they overlap
                    if (std::abs(tnum) < 1e-13 && std::abs(unum) < 1e-13) {
                        degenerate.store(true);
                        break;
                    }
                    continue;
                }
                const double t = tnum / den, u = unum / den;
                if (t <= 0 || t >= 1 || u <= 0 || u >= 1) continue;
                const double margin = 1e-7;
                if (t < margin || t > 1 - margin || u < margin || u > 1 - margin) {
                    degenerate.store(true);
                    break;
                }
                const double depth_a = pa[i].d + t * (pa[i + 1].d - pa[i].d);
                const double depth_b = pb[j].d + u * (pb[j + 1].d - pb[j].d);
                if (std::abs(depth_a - depth_b) < 1e-12) {
                    degenerate.store(true);
                    break;
                }
                // Crossing sign is det[t_over, t_under] of the projected
                // tangents; den already holds det[t_a, t_b].
                acc += (depth_a > depth_b) ? (den > 0 ? 1 : -1) : (den > 0 ? -1 : 1);
            }
            partial[i] = acc;
        }
    });
    if (degenerate.load()) return false;
    long sum = 0;
    for (long p : partial) sum += p;
    out_sum = sum;
    return true;
}

} // namespace

int linking_number_crossings(const ParamCurve& a, const ParamCurve& b,
                             const std::array<double, 3>& direction) {
    if (a.dim != 3 || b.dim != 3)
        throw Error(Err::DomainMismatch, "crossing count needs curves in R^3");
    if (!a.closed || !b.closed)
        throw Error(Err::NotClosed, "crossing count needs closed curves");

    static const double tweaks[16][3] = {
        {0, 0, 0},           {0.11, 0.07, -0.05}, {-0.09, 0.13, 0.06}, {0.05, -0.12, 0.1},
        {0.17, 0.02, 0.08},  {-0.14, -0.06, 0.11}, {0.03, 0.19, -0.07}, {-0.08, 0.04, -0.16},
        {0.21, -0.1, 0.05},  {-0.05, 0.16, 0.12},  {0.13, 0.09, 0.18},  {-0.19, 0.03, -0.04},
        {0.07, -0.17, -0.09}, {0.02, 0.08, 0.23},  {-0.12, -0.15, 0.07}, {0.09, 0.05, -0.21}};

    for (const auto& tw : tweaks) {
        std::array<double, 3> dir{direction[0] + tw[0], direction[1] + tw[1], direction[2] + tw[2]};
        Frame f;
        try {
            f = projection_frame(dir);
        } catch (const Error&) {
            continue;
        }
        long sum = 0;
        if (!crossing_sum(a, b, f, sum)) continue;
        if (sum % 2 != 0) continue; // a crossing was missed; try another view
        return static_cast<int>(sum / 2);
    }
    throw Error(Err::NonGenericProjection, "no generic projection found in 16 attempts");
}

ParamCurve stereo_project(const ParamCurve& c, const Pt& pole) {
    if (c.dim != 6)
        throw Error(Err::DomainMismatch, "stereographic projection expects the S^3 slice of R^6");
    std::array<double, 4> P{pole[2], pole[3], pole[4], pole[5]};
    {
        double n2 = 0;
        for (double x : P) n2 += x * x;
        if (std::abs(std::sqrt(n2) - 1.0) > 1e-6 || std::abs(pole[0]) > 1e-9 || std::abs(pole[1]) > 1e-9)
            throw Error(Err::DomainMismatch, "pole must lie on the S^3 slice");
    }
    for (const Pt& s : c.samples) {
        double d2 = 0;
        for (int k = 0; k < 6; ++k) {
            const double t = s[k] - pole[k];
            d2 += t * t;
        }
        if (std::sqrt(d2) <= 0.1)
            throw Error(Err::PoleTooClose, "pole within 0.1 of the curve");
    }

    // Orthonormal basis of P-perp in R^4, oriented so det[e1,e2,e3,P] = +1.
    std::array<std::array<double, 4>, 3> e;
    int have = 0;
    for (int axis = 0; axis < 4 && have < 3; ++axis) {
        std::array<double, 4> cand{};
        cand[axis] = 1.0;
        double dp = 0;
        for (int k = 0; k < 4; ++k) dp += cand[k] * P[k];
        for (int k = 0; k < 4; ++k) cand[k] -= dp * P[k];
        for (int prev = 0; prev < have; ++prev) {
            double d = 0;
            for (int k = 0; k < 4; ++k) d += cand[k] * e[prev][k];
            for (int k = 0; k < 4; ++k) cand[k] -= d * e[prev][k];
        }
        double len = 0;
        for (double x : cand) len += x * x;
        len = std::sqrt(len);
        if (len < 1e-6) continue;
        for (double& x : cand) x /= len;
        e[have++] = cand;
    }
    if (have != 3) throw Error(Err::DomainMismatch, "degenerate pole frame");

    auto det4 = [](const std::array<double, 4>& a, const std::array<double, 4>& b,
                   const std::array<double, 4>& c4, const std::array<double, 4>& d) {
        double m[4][4] = {{a[0], a[1], a[2], a[3]},
                          {b[0], b[1], b[2], b[3]},
                          {c4[0], c4[1], c4[2], c4[3]},
                          {d[0], d[1], d[2], d[3]}};
        // Gaussian elimination, 4x4
        double det = 1.0;
        for (int col = 0; col < 4; ++col) {
            int piv = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
            if (std::abs(m[piv][col]) < 1e-15) return 0.0;
            if (piv != col) {
                for (int k = 0; k < 4; ++k) std::swap(m[piv][k], m[col][k]);
                det = -det;
            }
            det *= m[col][col];
            for (int r = col + 1; r < 4; ++r) {
                const double f = m[r][col] / m[col][col];
                for (int k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
            }
        }
        return det;
    };
    if (det4(e[0], e[1], e[2], P) < 0) std::swap(e[0], e[1]);

    ParamCurve out;
    out.dim = 3;
    out.closed = c.closed;
    out.samples.resize(c.samples.size());
    for (size_t i = 0; i < c.samples.size(); ++i) {
        const std::array<double, 4> x{c.samples[i][2], c.samples[i][3], c.samples[i][4], c.samples[i][5]};
        double xp = 0;
        for (int k = 0; k < 4; ++k) xp += x[k] * P[k];
        const double denom = 1.0 - xp;
        Pt q{};
        for (int j = 0; j < 3; ++j) {
            double xe = 0;
            for (int k = 0; k < 4; ++k) xe += x[k] * e[j][k];
            q[j] = xe / denom;
        }
        out.samples[i] = q;
    }
    return out;
}

Pt choose_pole(const ParamCurve& a, const ParamCurve& b) {
    static const double raw[16][4] = {
        {1, 0, 0, 0},   {-1, 0, 0, 0},  {0, 1, 0, 0},   {0, -1, 0, 0},
        {0, 0, 1, 0},   {0, 0, -1, 0},  {0, 0, 0, 1},   {0, 0, 0, -1},
        {1, 1, 1, 1},   {1, -1, 1, -1}, {-1, 1, 1, -1}, {1, 1, -1, -1},
        {-1, -1, 1, 1}, {1, -1, -1, 1}, {-1, 1, -1, 1}, {-1, -1, -1, -1}};
    Pt best{};
    double best_d = -1;
    for (const auto& r : raw) {
        double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]);
        Pt pole{0, 0, r[0] / len, r[1] / len, r[2] / len, r[3] / len};
        double d = std::numeric_limits<double>::infinity();
        for (const ParamCurve* c : {&a, &b})
            for (const Pt& s : c->samples) {
                double d2 = 0;
                for (int k = 0; k < 6; ++k) {
                    const double t = s[k] - pole[k];
                    d2 += t * t;
                }
                d = std::min(d, d2);
            }
        if (d > best_d) {
            best_d = d;
            best = pole;
        }
    }
    return best;
}

} // namespace pagecross
