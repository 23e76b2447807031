#pragma once

#include "rtk/surface.hpp"

#include <string>
#include <vector>

namespace rtk {

// Dehn twist of the whole complex along a closed curve: every other curve
// and arc is re-routed through an inserted spiral annulus.  `right_handed`
// selects the handedness (convention documented in README; pinned by the
// twist-action-on-homology tests).  No-op when nothing crosses the curve.
void twist_state(Surface& s, Id along, bool right_handed);

// spec op dehn_twist: twist the state, return the image of target (same id)
Id dehn_twist(Surface& s, Id target, Id along, bool right_handed);

// Handle slide: replace mover by the band sum of mover and a parallel copy
// of over, along the connector arc `band` (an open aux curve from a vertex
// on mover to a vertex on over).  The band and mover are consumed.  Returns
// the new curve id (tagged with mover's family and name).
Id band_sum(Surface& s, Id mover, Id over, Id band);

// The two crossing resolutions of two curves meeting exactly once: each is
// an embedded closed curve; used to expand tube drags into twist pairs.
std::pair<Id, Id> resolve_once(Surface& s, Id c1, Id c2, Family fam, const std::string& base_name);

// Drag a tube end (marker circle `end_circle`) around the closed loop
// `path`, which must cross the end circle exactly once: expands to a
// right/left twist pair along the two resolutions.
void tube_drag(Surface& s, Id end_circle, Id path);

}  // namespace rtk
