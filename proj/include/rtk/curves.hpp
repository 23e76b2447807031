#pragma once

#include "rtk/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtk {

// ---------------------------------------------------------------------------
// Page template: a 3-row strip of quad cells with holes and tube ends in the
// middle row.  This is the canonical layout for generated surfaces; curves
// are routed by original-cell sequences.
// ---------------------------------------------------------------------------

struct PageFeature {
    enum Kind { hole, tube_end } kind;
    std::string label;  // hole label or tube-end label ("t0:a", "t0:b", ...)
};

struct TubeCells {
    // original face ids of the two cylinder rings, indexed by the side of the
    // end hole they are glued over (0=N,1=E,2=S,3=W as seen from the page)
    std::array<Id, 4> ring_a;  // ring glued to end a
    std::array<Id, 4> ring_b;
    Id waist = kNone;   // marker curve
    Id end_a = kNone;   // marker curve (attachment circle)
    Id end_b = kNone;
    int tube_index = -1;
};

struct Page {
    Surface s;
    int cols = 0;
    // original face ids by (row, col); middle-row entries of feature columns
    // are kNone after punching/gluing
    std::vector<std::array<Id, 3>> cell;  // cell[col][row]
    std::vector<int> feature_col;         // per feature, its column
    std::vector<PageFeature> features;
    std::vector<TubeCells> tube_cells;  // per tube, in tube order

    Id top(int c) const { return cell[c][0]; }
    Id mid(int c) const { return cell[c][1]; }
    Id bot(int c) const { return cell[c][2]; }
};

// Build a strip page: features placed at columns 1, 3, 5, ... with gap
// columns between; one margin column at each end.  Holes are punched;
// tube ends are left as faces for attach_tube_page.
Page make_page(const std::vector<PageFeature>& features);

// Glue a two-ring cylinder over two hole-shaped faces (generic surfaces).
// Returns the tube index in s.tubes.
int attach_tube(Surface& s, Id face_a, Id face_b, const std::string& label,
                TubeCells* cells = nullptr);

// Punch a face into a hole; its halves become a boundary loop.
void make_hole(Surface& s, Id face, const std::string& label);

// face-id -> original ancestor (faces created by split_face inherit)
Id face_orig(const Surface& s, Id f);

// true if original faces a and b share an edge in the current complex
bool origs_adjacent(const Surface& s, Id a, Id b);

// cell sequence through a tube, from the page cell adjacent to the entry
// ring to the page cell adjacent to the exit ring (both ends excluded)
std::vector<Id> tube_transit(const Surface& s, const TubeCells& tc, Id enter_page_orig,
                             Id exit_page_orig);

// ---------------------------------------------------------------------------
// Routing: insert curves crossing transversally through cell sequences.
// ---------------------------------------------------------------------------

// Closed curve visiting the given original faces in order (cyclic); between
// consecutive cells the curve crosses their shared interface once, taking
// the sub-route with fewest curve crossings.
Id route_closed_curve(Surface& s, Family fam, const std::string& name,
                      const std::vector<Id>& orig_faces);

// Properly embedded arc: starts on the boundary edge of start_bhalf (a face
// -1 half whose twin's face lies in orig_faces.front()), ends on end_bhalf.
Id route_arc(Surface& s, Family fam, const std::string& name, Id start_bhalf,
             const std::vector<Id>& orig_faces, Id end_bhalf);

// ---------------------------------------------------------------------------
// Shadows: combinatorial parallel paths.
// ---------------------------------------------------------------------------

// Closed parallel copy of a closed curve, pushed off to the given side.
Id parallel_copy(Surface& s, Id curve, bool left_side, Family fam, const std::string& name);

// Closed parallel track of an arbitrary closed walk (halves chained head to
// org); returns the new directed chain, not yet assigned to a curve.
std::vector<Id> shadow_walk_closed(Surface& s, const std::vector<Id>& walk, bool left_side);

// Parallel path along an open walk, attached at both ends.  pre_half is the
// stub from the start-attach vertex into the walk's first vertex, post_half
// the stub from the walk's last vertex to the end-attach vertex.
std::vector<Id> shadow_open(Surface& s, const std::vector<Id>& path, bool left_side, Id pre_half,
                            Id post_half);

// Remove leftover plain edges and degree-2 plain vertices (keeps doors:
// edges whose sides have different original faces, and boundary edges).
void cleanup(Surface& s);

// spec op: canonical oriented triangulated surface of genus g with b>=1
// boundary circles (page strip + g tubes); errors on b < 1.
Page build_surface(int g, int b);

}  // namespace rtk
