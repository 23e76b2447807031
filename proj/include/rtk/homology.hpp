#pragma once

#include "rtk/snf.hpp"
#include "rtk/surface.hpp"

#include <string>
#include <vector>

namespace rtk {

// Build the per-edge integer frame on demand: each half h gets a vector
// c(h) in Z^r, r = 2g+b-1, such that the class of any closed walk is the sum
// of its halves' vectors.  Face boundaries sum to zero.
void ensure_frame(const Surface& s);

// class of a closed curve in the current frame
std::vector<long long> homology_class(const Surface& s, Id curve);

// re-coordinate the frame so that the given curves' classes become the
// standard basis vectors e_1..e_r (their classes must form a basis)
void align_frame(Surface& s, const std::vector<Id>& basis_curves);

// algebraic intersection number: signed transversal crossing count
// (isotopy invariant for closed curves in any transversal position)
int algebraic_intersection(const Surface& s, Id c1, Id c2);

// H_1(Sigma) / <classes of the given curves>, in Smith normal form
AbelianGroup h1_quotient(const Surface& s, const std::vector<Id>& curve_ids);

// rank of the span of the curves' classes
int span_rank(const Surface& s, const std::vector<Id>& curve_ids);

// free pi_1 presentation machinery: generators are indexed 1..n; words are
// sequences of signed indices
struct Presentation {
    int n_generators = 0;
    std::vector<std::vector<int>> relators;
    AbelianGroup abelianized() const;
};

// presentation of pi_1(Sigma)/<<curves>>: free generators of pi_1(Sigma)
// (rank 2g+b-1) with one relator word per curve
Presentation pi1_presentation(const Surface& s, const std::vector<Id>& curve_ids);

}  // namespace rtk
