#pragma once

#include "rtk/surface.hpp"

#include <set>
#include <string>
#include <vector>

namespace rtk {

// Complementary regions of a set of "wall" curves (plus the surface
// boundary, which is always a wall).
struct Region {
    std::vector<Id> faces;
    // rim cycles: wall halves with this region on their face side
    std::vector<std::vector<Id>> cycles;
    int chi = 0;
    int n_boundary_circles = 0;  // rim cycles lying entirely on the surface boundary
};

std::vector<Region> trace_regions(const Surface& s, const std::set<Id>& walls);

// An innermost bigon between two wall curves: a disk region with exactly two
// corners.  arc1/arc2 are the rim runs (halves of curve1/curve2).
struct Bigon {
    bool found = false;
    Id curve1 = kNone, curve2 = kNone;
    std::vector<Id> arc1, arc2;
};

Bigon find_bigon(const Surface& s, const std::set<Id>& walls);

// Isotope one curve across the bigon; crossings between the two drop by 2.
void remove_bigon(Surface& s, const Bigon& b);

// Repeat bigon removal for the pair {c1, c2} until none remain.
void reduce_pair(Surface& s, Id c1, Id c2);

// Reduce every cross pair among the given curves until no bigon remains
// in the overlay of the whole set (sweep bound guards termination).
void reduce_all(Surface& s, const std::vector<Id>& curve_ids);

// spec op: geometric intersection number (computed on a scratch copy)
int geometric_intersection(const Surface& s, Id c1, Id c2);

// spec op minimal_position: reduce the pair in place
void minimal_position(Surface& s, Id c1, Id c2);

// Label-preserving orientation-preserving isomorphism of the overlay cell
// complexes of two decorated surfaces.  fam_map pairs families of s1 with
// families of s2 (e.g. alpha->delta, beta->epsilon); curves of unlisted
// families are ignored.
bool complexes_isomorphic(const Surface& s1, const Surface& s2,
                          const std::vector<std::pair<Family, Family>>& fam_map);

}  // namespace rtk
