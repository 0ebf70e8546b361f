#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pagecross/error.hpp"
#include "pagecross/halfint.hpp"

namespace pagecross {

// Combinatorial Legendrian fronts in the yz-plane of (R^3, ker(dz + x dy)).
//
// A diagram is an ordered sequence of events acting on a stack of strands
// indexed bottom-up. Time runs left to right along the y-axis; strand slots
// are z-levels. Crossings carry no over/under data: the front convention
// derives it (the descending strand is in front).

enum class EventKind : std::uint8_t { CuspOpen, CuspClose, Cross };

struct FrontEvent {
    EventKind kind;
    int pos; // 0-based strand slot the event acts at

    friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

inline FrontEvent cusp_open(int p) { return {EventKind::CuspOpen, p}; }
inline FrontEvent cusp_close(int p) { return {EventKind::CuspClose, p}; }
inline FrontEvent cross(int p) { return {EventKind::Cross, p}; }

struct FrontDiagram {
    // Strand count at the left edge. Nonzero only for open tangles
    // (Stein diagram blocks); plain fronts are closed with 0.
    int strands_in = 0;
    // Open tangles may end with strands on either edge; closed diagrams
    // must return to zero strands.
    bool open = false;
    std::vector<FrontEvent> events;
    // Orientation flag per component id (+1 canonical walk direction, -1
    // reversed). Missing entry = unoriented.
    std::vector<std::optional<int>> orientations;

    friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

// A strand piece lives in a slice (the vertical gap between consecutive
// events) at a slot. Slice i is bounded by events i-1 and i.
struct PieceRef {
    int slice = -1;
    int slot = -1;
    friend bool operator==(const PieceRef&, const PieceRef&) = default;
};

struct CuspInfo {
    int event_index;
    bool left;           // CuspOpen = left cusp, CuspClose = right cusp
    int component;
    bool down;           // passage direction under the canonical walk
};

struct CrossingInfo {
    int event_index;
    int comp_ascending;  // strand entering at pos, exiting at pos+1 (under)
    int comp_descending; // strand entering at pos+1, exiting at pos (over)
    int dir_ascending;   // +1 when the canonical walk traverses it left-to-right
    int dir_descending;
};

struct Component {
    int id = 0;
    bool closed = true;
    std::vector<PieceRef> pieces;   // in canonical walk order
    std::vector<int> piece_dirs;    // walk direction per piece (+1 rightward)
};

// Full connectivity analysis of a diagram. Pure function of the diagram;
// all invariants (slot bounds, balanced strands for closed diagrams) are
// checked here and reported via Error.
struct FrontAnalysis {
    std::vector<int> slice_counts;        // strand count per slice, size events+1
    std::vector<Component> components;    // numbered by first-seen piece in event order
    std::vector<CuspInfo> cusps;
    std::vector<CrossingInfo> crossings;
    std::vector<int> piece_component;     // flattened piece -> component id
    std::vector<int> piece_offset;        // slice -> flattened piece base index

    int piece_index(PieceRef p) const { return piece_offset[p.slice] + p.slot; }
    int component_of(PieceRef p) const { return piece_component[piece_index(p)]; }
};

FrontAnalysis analyze(const FrontDiagram& d);

// Front invariants. Component ids follow analyze() numbering. Operations
// that depend on orientation throw Err::NoOrientation when the component
// has no assigned flag.
int writhe(const FrontDiagram& d, int component);
struct CuspCounts { int left, right, up, down; };
CuspCounts cusp_counts(const FrontDiagram& d, int component);
int tb_front(const FrontDiagram& d, int component);
int rot_front(const FrontDiagram& d, int component);
bool check_bennequin(const FrontDiagram& d, int component, int chi);

// Writhe of a component counting self-crossings only, without requiring an
// orientation flag (the sign is reversal-invariant). Used for tangle arcs.
int writhe_unoriented(const FrontAnalysis& a, int component);
HalfInt tb_halves(const FrontDiagram& d, int component);

// Inserts a zig-zag (two cusps) on the component; tb drops by 1 and rot
// changes by sign.
FrontDiagram stabilize(const FrontDiagram& d, int component, int sign);

int num_components(const FrontDiagram& d);

// Reorders commuting far-apart events into a stable canonical order so that
// Reidemeister pattern windows become contiguous where possible.
FrontDiagram normalize(const FrontDiagram& d);

// Time reflection: event order reversed, left and right cusps exchanged.
// Writhe, cusp count and tb of every component are preserved; left-edge and
// right-edge boundary strands trade places.
FrontDiagram time_reflect(const FrontDiagram& d);

// Low-level connectivity step: the hop leaving `piece` in direction `dir`
// (+1 exits right). Used by the lift construction and move rewrites.
struct HopInfo {
    bool boundary = false;
    PieceRef next{};
    int next_dir = 0;
    int cusp_event = -1;  // >= 0 when the hop turns at a cusp
    bool cusp_down = false;
    int cross_event = -1; // >= 0 when the hop passes a crossing
    bool cross_descending = false;
};
HopInfo walk_hop(const FrontDiagram& d, PieceRef piece, int dir);

} // namespace pagecross
