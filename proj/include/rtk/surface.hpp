#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace rtk {

using Id = int;
constexpr Id kNone = -1;

// Curve families.  alpha/beta/gamma are diagram systems, delta/epsilon the
// standard model, eta cut-system arcs, marker for waists and tube ends,
// aux for script-local curves.
enum class Family { alpha, beta, gamma, delta, epsilon, eta, marker, aux };

const char* family_name(Family f);
Family family_from_name(const std::string& s);

struct Half {
    Id twin = kNone;
    Id next = kNone;   // next along the face cycle (face -1 = boundary loops)
    Id prev = kNone;
    Id face = kNone;   // -1 on the outside of a boundary edge
    Id org = kNone;
    Id curve = kNone;  // curve occupying this edge, or -1
    bool along = false;  // true iff this half is the curve's travel direction
    bool alive = false;
};

struct VertexRec {
    Id out = kNone;  // some half with org here
    bool alive = false;
};

struct FaceRec {
    Id half = kNone;
    Id orig = kNone;  // original ancestor face (routing cells); self when fresh
    bool alive = false;
};

struct CurveRec {
    Family fam = Family::aux;
    std::string name;
    std::vector<Id> halves;  // directed; cyclic if closed
    bool closed = true;
    bool alive = false;
};

struct TubeRecord {
    std::string label;
    Id waist = kNone;              // marker curve id
    std::array<Id, 2> ends{kNone, kNone};  // marker curve ids (attachment circles)
};

// Result of cutting along a closed curve: the two boundary circles and the
// severed transversal strands in cyclic order along the curve.
struct CutResult {
    Id left_boundary_half = kNone;   // a face -1 half on the left circle
    Id right_boundary_half = kNone;
    // one entry per crossing vertex, in order along the curve:
    // in_half ends on one side, out_half leaves from the other
    struct Strand {
        Id curve;
        Id in_half;        // points at the cut (head was the crossing vertex)
        Id out_half;       // leaves the cut
        bool enters_left;  // in_half ends on the left copy
        Id left_vertex;
        Id right_vertex;
    };
    std::vector<Strand> strands;
    std::vector<Id> left_vertices;  // vL_i per curve step i
    std::vector<Id> right_vertices;
};

// Oriented surface with boundary as a half-edge complex.  Faces are disks
// (arbitrary polygons); curves are edge-disjoint cycles/paths in the
// 1-skeleton meeting each other only at 4-valent transversal crossings.
class Surface {
  public:
    std::vector<Half> halves;
    std::vector<VertexRec> verts;
    std::vector<FaceRec> faces;
    std::vector<CurveRec> curves;
    std::vector<TubeRecord> tubes;
    // attributes used by io/render: original triangle/edge provenance
    std::map<std::string, std::string> notes;

    // --- navigation ---
    Id twin(Id h) const { return halves[h].twin; }
    Id next(Id h) const { return halves[h].next; }
    Id prev(Id h) const { return halves[h].prev; }
    Id face(Id h) const { return halves[h].face; }
    Id org(Id h) const { return halves[h].org; }
    Id head(Id h) const { return halves[halves[h].twin].org; }
    // counterclockwise around the origin vertex
    Id rot_ccw(Id h) const { return halves[halves[h].prev].twin; }
    Id rot_cw(Id h) const { return halves[halves[h].twin].next; }
    bool is_boundary_edge(Id h) const { return halves[h].face == kNone || halves[halves[h].twin].face == kNone; }

    // --- counts ---
    int n_vertices() const;
    int n_edges() const;
    int n_faces() const;
    int euler() const { return n_vertices() - n_edges() + n_faces(); }
    int n_boundary_circles() const;
    bool connected() const;
    int n_components() const;
    // (genus, boundary circles) per component, sorted
    std::vector<std::pair<int, int>> component_summary() const;
    int genus() const;  // of a connected complex

    // --- builders ---
    Id new_vertex();
    Id new_half();
    Id new_face_rec();
    // isolated n-gon; returns the n interior halves in ccw order
    std::vector<Id> add_polygon(int n);
    // identify the boundary edge of ha with that of hb (both must be face -1
    // halves); org(ha) merges with head(hb) and vice versa
    void glue_boundary(Id ha, Id hb);
    // insert a vertex on the edge of h; h keeps its origin, the returned
    // vertex sits between; curve membership is inherited
    Id split_edge(Id h);
    // new edge from org(ha) to org(hb), splitting their common face;
    // returns the half from org(ha) to org(hb)
    Id split_face(Id ha, Id hb);
    // remove an edge separating two distinct faces, merging them
    void merge_faces(Id h);
    // remove a degree-2 vertex, fusing its two edges (same curve or both plain)
    void dissolve_vertex(Id v);
    // attach a disk face along the boundary loop of h (face -1 half)
    Id cap_boundary(Id h);

    // --- curves ---
    Id add_curve(Family fam, std::string name, std::vector<Id> halves, bool closed);
    void drop_curve(Id c);  // edges become plain; record dies
    void retag_curve(Id c, Family fam, std::string name);
    std::vector<Id> curves_of(Family fam) const;
    Id find_curve(Family fam, const std::string& name) const;
    bool curve_simple(Id c) const;  // embedded: distinct vertices except closure
    bool curve_interior(Id c) const;  // touches no boundary vertex

    // number of transversal crossing vertices shared by two curves, as drawn
    int raw_crossings(Id c1, Id c2) const;
    // signed sum over crossings (needs both oriented); +1 where (c1,c2) frame
    // is positively oriented
    int signed_crossings(Id c1, Id c2) const;

    // --- surgery ---
    CutResult cut_along(Id curve);
    // cut along curve and cap both sides; curve and its crossers are dropped
    void surger_curve(Id curve);

    // deep copy with compaction; fills remaps old->new ids
    Surface compact(std::vector<Id>* half_map = nullptr, std::vector<Id>* curve_map = nullptr) const;

    // structural consistency; throws std::logic_error with a reason
    void validate() const;

    // homology frame: per-edge integer vectors, lazily built (homology.cpp)
    mutable std::vector<std::vector<long long>> frame;  // indexed by half; twin = negation
    mutable int frame_rank = 0;
    void invalidate_frame() const { frame.clear(); frame_rank = 0; }
};

// disjoint union (for the tube-merging-components test)
Surface disjoint_union(const Surface& a, const Surface& b);

}  // namespace rtk
