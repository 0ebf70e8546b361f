#include "pagecross/front.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace pagecross {

namespace {

// A position in a walk: the piece we are on and the travel direction
// (+1 exits through the piece's right end, -1 through its left end).
struct Cursor {
    PieceRef piece;
    int dir;
    friend bool operator==(const Cursor&, const Cursor&) = default;
};

struct Hop {
    bool boundary = false;
    Cursor next{};
    // Set when the hop turns at a cusp: event index and whether the walk
    // arrives via the upper branch (a downward passage).
    int cusp_event = -1;
    bool cusp_down = false;
    // Set when the hop passes a crossing: event index and which transit
    // (ascending strand enters at pos, descending enters at pos+1).
    int cross_event = -1;
    bool cross_descending = false;
};

class Walker {
  public:
    explicit Walker(const FrontDiagram& d) : d_(d) {}

    Hop hop(Cursor c) const {
        const int i = c.piece.slice;
        const int s = c.piece.slot;
        Hop h;
        if (c.dir > 0) {
            if (i == static_cast<int>(d_.events.size())) { h.boundary = true; return h; }
            const FrontEvent e = d_.events[i];
            const int p = e.pos;
            switch (e.kind) {
            case EventKind::CuspOpen:
                h.next = {{i + 1, s < p ? s : s + 2}, +1};
                return h;
            case EventKind::CuspClose:
                if (s == p || s == p + 1) {
                    h.next = {{i, s == p ? p + 1 : p}, -1};
                    h.cusp_event = i;
                    h.cusp_down = (s == p + 1);
                    return h;
                }
                h.next = {{i + 1, s < p ? s : s - 2}, +1};
                return h;
            case EventKind::Cross:
                if (s == p || s == p + 1) {
                    h.next = {{i + 1, s == p ? p + 1 : p}, +1};
                    h.cross_event = i;
                    h.cross_descending = (s == p + 1);
                    return h;
                }
                h.next = {{i + 1, s}, +1};
                return h;
            }
        } else {
            if (i == 0) { h.boundary = true; return h; }
            const FrontEvent e = d_.events[i - 1];
            const int p = e.pos;
            switch (e.kind) {
            case EventKind::CuspOpen:
                if (s == p || s == p + 1) {
                    h.next = {{i, s == p ? p + 1 : p}, +1};
                    h.cusp_event = i - 1;
                    h.cusp_down = (s == p + 1);
                    return h;
                }
                h.next = {{i - 1, s < p ? s : s - 2}, -1};
                return h;
            case EventKind::CuspClose:
                h.next = {{i - 1, s < p ? s : s + 2}, -1};
                return h;
            case EventKind::Cross:
                if (s == p || s == p + 1) {
                    h.next = {{i - 1, s == p ? p + 1 : p}, -1};
                    h.cross_event = i - 1;
                    // Moving left out of slot p means we are on the strand
                    // that exits (rightward) at p, i.e. the descending one.
                    h.cross_descending = (s == p);
                    return h;
                }
                h.next = {{i - 1, s}, -1};
                return h;
            }
        }
        std::abort();
    }

  private:
    const FrontDiagram& d_;
};

std::optional<int> orientation_of(const FrontDiagram& d, int component) {
    if (component < 0) return std::nullopt;
    if (static_cast<size_t>(component) < d.orientations.size())
        return d.orientations[component];
    return std::nullopt;
}

int require_orientation(const FrontDiagram& d, int component) {
    auto o = orientation_of(d, component);
    if (!o) throw Error(Err::NoOrientation, "component " + std::to_string(component));
    return *o;
}

const Component& require_component(const FrontAnalysis& a, int component) {
    if (component < 0 || static_cast<size_t>(component) >= a.components.size())
        throw Error(Err::UnknownComponent, "component " + std::to_string(component));
    return a.components[component];
}

} // namespace

FrontAnalysis analyze(const FrontDiagram& d) {
    const int m = static_cast<int>(d.events.size());
    FrontAnalysis a;
    a.slice_counts.resize(m + 1);

    if (d.strands_in < 0) throw Error(Err::MalformedEvent, "negative left-edge strand count");
    if (d.strands_in > 0 && !d.open)
        throw Error(Err::UnbalancedStrands, "closed diagram with left-edge strands");
    int n = d.strands_in;
    a.slice_counts[0] = n;
    for (int i = 0; i < m; ++i) {
        const FrontEvent e = d.events[i];
        if (e.pos < 0)
            throw Error(Err::MalformedEvent, "negative position at event " + std::to_string(i));
        switch (e.kind) {
        case EventKind::CuspOpen:
            if (e.pos > n)
                throw Error(Err::MalformedEvent, "cusp_open above strand stack at event " + std::to_string(i));
            n += 2;
            break;
        case EventKind::CuspClose:
        case EventKind::Cross:
            if (n < 2)
                throw Error(Err::UnbalancedStrands, "event " + std::to_string(i) + " needs two strands");
            if (e.pos > n - 2)
                throw Error(Err::MalformedEvent, "position beyond strand stack at event " + std::to_string(i));
            if (e.kind == EventKind::CuspClose) n -= 2;
            break;
        }
        a.slice_counts[i + 1] = n;
    }
    if (n != 0 && !d.open)
        throw Error(Err::UnbalancedStrands, "closed diagram ends with " + std::to_string(n) + " strands");

    a.piece_offset.resize(m + 2, 0);
    for (int i = 0; i <= m; ++i) a.piece_offset[i + 1] = a.piece_offset[i] + a.slice_counts[i];
    const int total_pieces = a.piece_offset[m + 1];
    a.piece_component.assign(total_pieces, -1);

    struct Transit { int comp = -1; int dir = 0; bool seen = false; };
    std::vector<Transit> asc(m), desc(m);
    struct CuspSeen { int comp = -1; bool down = false; bool seen = false; };
    std::vector<CuspSeen> cusp_seen(m);

    Walker walker(d);

    auto record_walk = [&](const std::vector<Cursor>& walk, int comp, bool closed) {
        const size_t limit = closed ? walk.size() : walk.size() - 1;
        for (size_t k = 0; k < walk.size(); ++k) a.piece_component[a.piece_index(walk[k].piece)] = comp;
        for (size_t k = 0; k < limit; ++k) {
            Hop h = walker.hop(walk[k]);
            assert(!h.boundary);
            if (h.cusp_event >= 0) {
                cusp_seen[h.cusp_event] = {comp, h.cusp_down, true};
            } else if (h.cross_event >= 0) {
                Transit& t = h.cross_descending ? desc[h.cross_event] : asc[h.cross_event];
                t.comp = comp;
                t.dir = walk[k].dir;
                t.seen = true;
            }
        }
    };

    int next_id = 0;
    for (int i = 0; i <= m; ++i) {
        for (int s = 0; s < a.slice_counts[i]; ++s) {
            if (a.piece_component[a.piece_offset[i] + s] >= 0) continue;
            const Cursor start{{i, s}, +1};
            std::vector<Cursor> walk;
            bool closed = true;
            Cursor c = start;
            for (;;) {
                walk.push_back(c);
                Hop h = walker.hop(c);
                if (h.boundary) { closed = false; break; }
                if (h.next == start) break;
                c = h.next;
            }
            if (!closed) {
                // Open arc: extend backwards to the other boundary end, then
                // order the walk from that end so arcs have a deterministic
                // traversal.
                std::vector<Cursor> back;
                c = {start.piece, -1};
                for (;;) {
                    Hop h = walker.hop(c);
                    if (h.boundary) break;
                    c = h.next;
                    back.push_back(c);
                }
                std::vector<Cursor> full;
                full.reserve(back.size() + walk.size());
                for (auto it = back.rbegin(); it != back.rend(); ++it)
                    full.push_back({it->piece, -it->dir});
                for (const Cursor& w : walk) full.push_back(w);
                walk = std::move(full);
            }
            record_walk(walk, next_id, closed);
            Component comp;
            comp.id = next_id;
            comp.closed = closed;
            for (const Cursor& w : walk) {
                comp.pieces.push_back(w.piece);
                comp.piece_dirs.push_back(w.dir);
            }
            a.components.push_back(std::move(comp));
            ++next_id;
        }
    }

    for (int i = 0; i < m; ++i) {
        const FrontEvent e = d.events[i];
        if (e.kind == EventKind::Cross) {
            if (!asc[i].seen || !desc[i].seen)
                throw Error(Err::DanglingComponent, "crossing transit unvisited at event " + std::to_string(i));
            a.crossings.push_back({i, asc[i].comp, desc[i].comp, asc[i].dir, desc[i].dir});
        } else {
            if (!cusp_seen[i].seen)
                throw Error(Err::DanglingComponent, "cusp unvisited at event " + std::to_string(i));
            a.cusps.push_back({i, e.kind == EventKind::CuspOpen, cusp_seen[i].comp, cusp_seen[i].down});
        }
    }
    return a;
}

int num_components(const FrontDiagram& d) {
    return static_cast<int>(analyze(d).components.size());
}

namespace {

int crossing_sign(const CrossingInfo& c) {
    // det[d_over, d_under] with the front convention: the descending strand
    // (entering at pos+1, exiting at pos) is in front. Positive crossings
    // have det > 0, matching the sign figure for front projections.
    const double over_y = c.dir_descending > 0 ? 1.0 : -1.0;
    const double over_z = c.dir_descending > 0 ? -1.0 : 1.0;
    const double under_y = c.dir_ascending > 0 ? 1.0 : -1.0;
    const double under_z = c.dir_ascending > 0 ? 1.0 : -1.0;
    const double det = over_y * under_z - over_z * under_y;
    return det > 0 ? +1 : -1;
}

} // namespace

int writhe_unoriented(const FrontAnalysis& a, int component) {
    int w = 0;
    for (const CrossingInfo& c : a.crossings)
        if (c.comp_ascending == component && c.comp_descending == component) w += crossing_sign(c);
    return w;
}

int writhe(const FrontDiagram& d, int component) {
    FrontAnalysis a = analyze(d);
    const Component& k = require_component(a, component);
    if (!k.closed) throw Error(Err::NotClosed, "writhe of an arc");
    require_orientation(d, component);
    // Reversing the orientation flips both strand directions at every
    // self-crossing, so the flag does not enter the sum.
    return writhe_unoriented(a, component);
}

CuspCounts cusp_counts(const FrontDiagram& d, int component) {
    FrontAnalysis a = analyze(d);
    require_component(a, component);
    const int flag = require_orientation(d, component);
    CuspCounts out{0, 0, 0, 0};
    for (const CuspInfo& c : a.cusps) {
        if (c.component != component) continue;
        (c.left ? out.left : out.right)++;
        const bool down = flag > 0 ? c.down : !c.down;
        (down ? out.down : out.up)++;
    }
    return out;
}

int tb_front(const FrontDiagram& d, int component) {
    FrontAnalysis a = analyze(d);
    const Component& k = require_component(a, component);
    if (!k.closed) throw Error(Err::NotClosed, "tb of an arc");
    int cusps = 0;
    for (const CuspInfo& c : a.cusps)
        if (c.component == component) ++cusps;
    assert(cusps % 2 == 0);
    return writhe_unoriented(a, component) - cusps / 2;
}

HalfInt tb_halves(const FrontDiagram& d, int component) {
    FrontAnalysis a = analyze(d);
    require_component(a, component);
    int cusps = 0;
    for (const CuspInfo& c : a.cusps)
        if (c.component == component) ++cusps;
    return HalfInt::halves(2 * writhe_unoriented(a, component) - cusps);
}

int rot_front(const FrontDiagram& d, int component) {
    FrontAnalysis a = analyze(d);
    const Component& k = require_component(a, component);
    if (!k.closed) throw Error(Err::NotClosed, "rot of an arc");
    const int flag = require_orientation(d, component);
    int down = 0, up = 0;
    for (const CuspInfo& c : a.cusps) {
        if (c.component != component) continue;
        (c.down ? down : up)++;
    }
    if (flag < 0) std::swap(down, up);
    assert((down - up) % 2 == 0);
    return (down - up) / 2;
}

bool check_bennequin(const FrontDiagram& d, int component, int chi) {
    FrontAnalysis a = analyze(d);
    const Component& k = require_component(a, component);
    if (!k.closed) throw Error(Err::NotClosed, "Bennequin bound needs a closed component");
    int cusps = 0, down = 0, up = 0;
    for (const CuspInfo& c : a.cusps) {
        if (c.component != component) continue;
        ++cusps;
        (c.down ? down : up)++;
    }
    const int tb = writhe_unoriented(a, component) - cusps / 2;
    const int abs_rot = std::abs(down - up) / 2;
    return tb + abs_rot <= -chi;
}

FrontDiagram stabilize(const FrontDiagram& d, int component, int sign) {
    if (sign != 1 && sign != -1) throw Error(Err::MalformedEvent, "stabilization sign must be +-1");
    FrontAnalysis a = analyze(d);
    const Component& k = require_component(a, component);
    if (!k.closed) throw Error(Err::NotClosed, "stabilize an arc");

    // Insert the zig-zag in the slice of the component's first piece. The
    // cusp pair attaches above or below the strand; which variant realizes
    // the requested rot change depends on the traversal direction there.
    const PieceRef at = k.pieces.front();
    const int dir = k.piece_dirs.front();
    const int flag = orientation_of(d, component).value_or(1);
    const int eff = dir * flag;
    const int s = at.slot;

    FrontDiagram out = d;
    auto it = out.events.begin() + at.slice;
    // Cusp pair below the strand yields two down cusps on a rightward
    // strand (rot +1); above yields two up cusps (rot -1).
    if ((sign > 0) == (eff > 0)) {
        it = out.events.insert(it, cusp_open(s));
        out.events.insert(it + 1, cusp_close(s + 1));
    } else {
        it = out.events.insert(it, cusp_open(s + 1));
        out.events.insert(it + 1, cusp_close(s));
    }
    // The insertion is slot-neutral and adds no pieces earlier in first-seen
    // order, so component numbering and orientations carry over.
    out.orientations = d.orientations;
    return out;
}

HopInfo walk_hop(const FrontDiagram& d, PieceRef piece, int dir) {
    Walker w(d);
    Hop h = w.hop({piece, dir});
    HopInfo out;
    out.boundary = h.boundary;
    if (!h.boundary) {
        out.next = h.next.piece;
        out.next_dir = h.next.dir;
    }
    out.cusp_event = h.cusp_event;
    out.cusp_down = h.cusp_down;
    out.cross_event = h.cross_event;
    out.cross_descending = h.cross_descending;
    return out;
}

FrontDiagram time_reflect(const FrontDiagram& d) {
    FrontAnalysis a = analyze(d); // validate and get the right-edge count
    FrontDiagram out;
    out.open = d.open;
    out.strands_in = a.slice_counts.back();
    out.events.reserve(d.events.size());
    for (auto it = d.events.rbegin(); it != d.events.rend(); ++it) {
        FrontEvent e = *it;
        if (e.kind == EventKind::CuspOpen) e.kind = EventKind::CuspClose;
        else if (e.kind == EventKind::CuspClose) e.kind = EventKind::CuspOpen;
        out.events.push_back(e);
    }
    // Component numbering changes under reflection; orientations are not
    // carried over.
    return out;
}

FrontDiagram normalize(const FrontDiagram& d) {
    FrontDiagram out = d;
    auto shift_of = [](EventKind k) {
        return k == EventKind::CuspOpen ? +2 : k == EventKind::CuspClose ? -2 : 0;
    };
    auto rank = [](const FrontEvent& e) {
        return e.pos * 4 + (e.kind == EventKind::CuspOpen ? 0 : e.kind == EventKind::Cross ? 1 : 2);
    };
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 1 + static_cast<int>(out.events.size())) {
        changed = false;
        for (size_t j = 0; j + 1 < out.events.size(); ++j) {
            const FrontEvent a = out.events[j];
            const FrontEvent b = out.events[j + 1];
            // Swap only strictly independent neighbours, keeping a stable
            // lexicographic order so the pass terminates.
            if (b.pos + 1 < a.pos) {
                FrontEvent a2 = a;
                a2.pos += shift_of(b.kind);
                if (rank(b) < rank(a)) {
                    out.events[j] = b;
                    out.events[j + 1] = a2;
                    changed = true;
                }
            } else {
                const int sa = shift_of(a.kind);
                if (b.pos - sa > a.pos + 1) {
                    FrontEvent b2 = b;
                    b2.pos -= sa;
                    if (rank(b2) < rank(a)) {
                        out.events[j] = b2;
                        out.events[j + 1] = a;
                        changed = true;
                    }
                }
            }
        }
    }
    // Event reordering can renumber components; orientations would need a
    // remap, so normalized diagrams drop them unless nothing moved.
    if (!(out.events == d.events)) out.orientations.clear();
    return out;
}

} // namespace pagecross
