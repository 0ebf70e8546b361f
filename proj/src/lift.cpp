#include "pagecross/lift.hpp"

#include <cmath>

namespace pagecross {

namespace {

// Layout constants (diagram units, rescaled at the end). Event windows are
// wide so every strand slope stays below ~1.2; steeper fronts would bring
// the Reeb pushoff closer than eps/2 to the curve.
constexpr double kSpacing = 8.0;    // distance between event centers
constexpr double kHalfWin = 3.2;    // event window half-width
constexpr double kCuspDepth = 3.0;  // cusp tip to branch ends

double event_center(int i) { return kSpacing * (i + 1); }

double smoothstep(double s) { return s * s * s * (10.0 + s * (-15.0 + 6.0 * s)); }
double dsmoothstep(double s) { return 30.0 * s * s * (1.0 - s) * (1.0 - s); }

// A monotone-in-y strand segment: z eases from za to zb over the profile
// sub-interval [pa, pb] of the window, flat elsewhere. x = -dz/dy.
struct GraphPiece {
    double ya, yb; // traversal order (ya may exceed yb for leftward travel)
    double za, zb;
    double pa = 0.0, pb = 1.0;
};

// Cusp spur: y(u) = tip_y + (end_y - tip_y) u^2, z an odd quintic from
// enter_z (u = -1) to exit_z (u = +1). Slope z'/y' stays bounded and
// vanishes at both ends and at the tip.
struct CuspPiece {
    double tip_y, end_y;
    double enter_z, exit_z;
};

struct Piece {
    bool is_cusp = false;
    GraphPiece g{};
    CuspPiece c{};
};

struct Sample {
    double x, y, z;
};

Sample eval_graph(const GraphPiece& g, double s) {
    const double yfrac = smoothstep(s);
    const double y = g.ya + (g.yb - g.ya) * yfrac;
    double z, slope;
    if (g.zb == g.za) {
        z = g.za;
        slope = 0.0;
    } else if (yfrac <= g.pa) {
        z = g.za;
        slope = 0.0;
    } else if (yfrac >= g.pb) {
        z = g.zb;
        slope = 0.0;
    } else {
        const double q = (yfrac - g.pa) / (g.pb - g.pa);
        z = g.za + (g.zb - g.za) * smoothstep(q);
        slope = (g.zb - g.za) * dsmoothstep(q) / ((g.pb - g.pa) * (g.yb - g.ya));
    }
    return {-slope, y, z};
}

Sample eval_cusp(const CuspPiece& c, double s) {
    const double u = -1.0 + 2.0 * smoothstep(s);
    const double y = c.tip_y + (c.end_y - c.tip_y) * u * u;
    const double dz = c.exit_z - c.enter_z;
    const double z = 0.5 * (c.enter_z + c.exit_z) + 0.5 * dz * 0.5 * (5.0 * u * u * u - 3.0 * u * u * u * u * u);
    // slope = z'(u)/y'(u); the shared factor u cancels analytically.
    const double zprime_over_u = 0.25 * dz * 15.0 * u * (1.0 - u * u);
    const double yprime_over_u = 2.0 * (c.end_y - c.tip_y);
    const double slope = zprime_over_u / yprime_over_u;
    return {-slope, y, z};
}

} // namespace

ParamCurve legendrian_lift(const FrontDiagram& d, int component, int resolution) {
    if (resolution < 64)
        throw Error(Err::ResolutionTooLow, "lift needs at least 64 samples per segment");
    FrontAnalysis a = analyze(d);
    if (component < 0 || static_cast<size_t>(component) >= a.components.size())
        throw Error(Err::UnknownComponent, "component " + std::to_string(component));
    const Component& k = a.components[component];
    if (!k.closed) throw Error(Err::NotClosed, "lift of an arc");

    const int m = static_cast<int>(d.events.size());
    auto run_left = [&](int slice) { return slice == 0 ? 0.0 : event_center(slice - 1) + kHalfWin; };
    auto run_right = [&](int slice) {
        return slice == m ? event_center(m) : event_center(slice) - kHalfWin;
    };

    std::vector<Piece> pieces;
    const size_t steps = k.pieces.size();
    for (size_t idx = 0; idx < steps; ++idx) {
        const PieceRef pr = k.pieces[idx];
        const int dir = k.piece_dirs[idx];

        // Horizontal run through the slice.
        Piece run;
        run.g.za = run.g.zb = pr.slot;
        run.g.ya = dir > 0 ? run_left(pr.slice) : run_right(pr.slice);
        run.g.yb = dir > 0 ? run_right(pr.slice) : run_left(pr.slice);
        pieces.push_back(run);

        // Connector through the event the walk leaves by.
        HopInfo h = walk_hop(d, pr, dir);
        if (h.boundary) throw Error(Err::NotClosed, "walk reached a boundary");

        const int ev = dir > 0 ? pr.slice : pr.slice - 1;
        const FrontEvent e = d.events[ev];
        const double yc = event_center(ev);
        const double w0 = yc - kHalfWin, w1 = yc + kHalfWin;

        Piece conn;
        if (h.cusp_event >= 0) {
            conn.is_cusp = true;
            conn.c.enter_z = pr.slot;
            conn.c.exit_z = h.next.slot;
            if (e.kind == EventKind::CuspClose) {
                // right cusp: branches from the window's left edge
                conn.c.end_y = w0;
                conn.c.tip_y = w0 + kCuspDepth;
            } else {
                // left cusp: branches end on the window's right edge
                conn.c.end_y = w1;
                conn.c.tip_y = w1 - kCuspDepth;
            }
        } else {
            conn.g.ya = dir > 0 ? w0 : w1;
            conn.g.yb = dir > 0 ? w1 : w0;
            conn.g.za = pr.slot;
            conn.g.zb = h.next.slot;
            // Full-window easing clears the cusp spur: near an open spur
            // the rising strand sits at least 0.5 above the upper branch,
            // and symmetrically for close spurs.
        }
        pieces.push_back(conn);
    }

    const size_t piece_count = pieces.size();
    // Finite-difference residuals scale like piece_count / res^2; grow the
    // per-piece sampling with the walk length so the lift postcondition
    // (isotropy residual below 1e-6) holds for large fronts too.
    const size_t res_eff = std::max<size_t>(
        static_cast<size_t>(resolution),
        static_cast<size_t>(2048.0 * std::sqrt(static_cast<double>(piece_count))));
    const size_t n = piece_count * res_eff;
    ParamCurve out;
    out.dim = 3;
    out.closed = true;
    out.samples.resize(n);

    // Strand spacing is pinned at 0.1 so the default Reeb pushoff (0.01)
    // stays clear of neighbouring strands; slopes (and so x) are scale
    // invariant.
    const double scale = 0.1;
    double zmid = 0;
    {
        int max_slot = 1;
        for (int c = 0; c <= m; ++c) max_slot = std::max(max_slot, a.slice_counts[c]);
        zmid = 0.5 * max_slot;
    }

    const double ymid = 0.5 * kSpacing * (m + 1);
    for (size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n) * piece_count;
        size_t pk = static_cast<size_t>(t);
        if (pk >= piece_count) pk = piece_count - 1;
        const double s = t - static_cast<double>(pk);
        const Piece& p = pieces[pk];
        const Sample smp = p.is_cusp ? eval_cusp(p.c, s) : eval_graph(p.g, s);
        out.samples[i] = Pt{smp.x, scale * (smp.y - ymid), scale * (smp.z - zmid), 0, 0, 0};
    }
    return out;
}

} // namespace pagecross
