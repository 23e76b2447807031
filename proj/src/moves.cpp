#include "rtk/moves.hpp"

#include "rtk/curves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rtk {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::logic_error("moves: " + msg); }
}  // namespace

void twist_state(Surface& s, Id along, bool right_handed) {
    const CurveRec& a = s.curves[along];
    if (!a.alive) fail("twist: dead curve");
    if (!a.closed) fail("twist: along an arc");
    if (!s.curve_simple(along)) fail("twist: along a non-simple curve");

    // nothing crosses: the twist is isotopic to the identity on every curve
    {
        bool any = false;
        std::set<Id> av;
        for (Id h : a.halves) av.insert(s.org(h));
        for (size_t c = 0; c < s.curves.size(); ++c) {
            if (!s.curves[c].alive || static_cast<Id>(c) == along) continue;
            for (Id h : s.curves[c].halves)
                if (av.count(s.org(h)) || av.count(s.head(h))) {
                    any = true;
                    break;
                }
            if (any) break;
        }
        if (!any) return;
    }

    int m = static_cast<int>(a.halves.size());
    std::vector<Id> interior_left = a.halves;  // survive the cut as left circle

    CutResult cut = s.cut_along(along);
    int k = static_cast<int>(cut.strands.size());
    if (k == 0) fail("twist: inconsistent crossing scan");

    // strand position (curve step index) per strand
    std::vector<int> pos(k, -1);
    {
        std::map<Id, int> vidx;
        for (int i = 0; i < m; ++i) vidx[cut.left_vertices[i]] = i;
        for (int j = 0; j < k; ++j) pos[j] = vidx.at(cut.strands[j].left_vertex);
    }

    // circles as ordered edge lists, aligned with curve steps:
    // left boundary halves (face -1 twins of the interior halves) and right
    std::vector<Id> bl(m), br(m);
    for (int i = 0; i < m; ++i) bl[i] = s.twin(interior_left[i]);
    {
        // right circle: walk from cut.right_boundary_half (= bR[0]), next() ascends
        Id cur = cut.right_boundary_half;
        for (int i = 0; i < m; ++i) {
            br[i] = cur;
            cur = s.next(cur);
        }
        if (cur != cut.right_boundary_half) fail("twist: right circle length mismatch");
    }

    // handedness: for one handedness the annulus bottom glues to the left
    // circle, for the other to the right circle (mirror across the curve)
    bool bottom_left = right_handed;
    // sort strands by position (cyclic start at the smallest)
    std::vector<int> order(k);
    for (int j = 0; j < k; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return pos[x] < pos[y]; });

    // sector j spans circle edge indices P[j] .. P[j+1]-1 (curve direction)
    std::vector<int> P(k);
    for (int j = 0; j < k; ++j) P[j] = pos[order[j]];

    bool frame_on = !s.frame.empty();
    int fr = s.frame_rank;
    std::vector<std::vector<long long>> stash;
    if (frame_on) {
        stash = std::move(s.frame);
        s.frame.clear();  // gluing would invalidate; values restored below
    }

    // build sector faces.  Coherent layout (forced by the circle gluing):
    //  P^0:   [0..len-1] bottom arc (descending circle edges),
    //         [len] diag_0 forward, [len+1] spoke_{j+1} segment 1->0
    //  P^c:   [0] diag_{c-1} reversed, [1] spoke_j c-1->c,
    //         [2] diag_c forward, [3] spoke_{j+1} c+1->c
    //  P^k:   [0] diag_{k-1} reversed, [1] spoke_j k-1->k,
    //         [2..len+1] top arc (ascending circle edges)
    std::vector<std::vector<Id>> diag_fwd(k, std::vector<Id>(k, kNone));
    struct SectorFaces {
        std::vector<Id> p0, pk;
        std::vector<std::vector<Id>> quads;  // k-1 quads
        int len = 0;
    };
    std::vector<SectorFaces> sf(k);
    for (int j = 0; j < k; ++j) {
        int from = P[j], to = P[(j + 1) % k];
        int len = ((to - from) % m + m) % m;
        if (len == 0) len = m;
        sf[j].len = len;
        sf[j].p0 = s.add_polygon(len + 2);
        for (int c = 1; c < k; ++c) sf[j].quads.push_back(s.add_polygon(4));
        sf[j].pk = s.add_polygon(len + 2);
    }
    auto d_fwd_side = [&](int j, int c) {  // forward diag level c->c+1 of sector j
        return c == 0 ? sf[j].p0[sf[j].len] : sf[j].quads[c - 1][2];
    };
    auto d_rev_side = [&](int j, int c) {  // reversed copy of the same diag
        return c + 1 == k ? sf[j].pk[0] : sf[j].quads[c][0];
    };
    auto spoke_up_side = [&](int j, int a) {  // spoke theta_j segment a->a+1, upward copy
        return a + 1 == k ? sf[j].pk[1] : sf[j].quads[a][1];
    };
    auto spoke_down_side = [&](int j, int a) {  // same segment of spoke theta_{j+1}, downward
        return a == 0 ? sf[j].p0[sf[j].len + 1] : sf[j].quads[a - 1][3];
    };

    for (int j = 0; j < k; ++j) {
        for (int c = 0; c < k; ++c) s.glue_boundary(s.twin(d_fwd_side(j, c)), s.twin(d_rev_side(j, c)));
        // spoke theta_{j+1}: down copies live in sector j, up copies in sector j+1
        int jn = (j + 1) % k;
        for (int a = 0; a < k; ++a)
            s.glue_boundary(s.twin(spoke_down_side(j, a)), s.twin(spoke_up_side(jn, a)));
    }
    for (int j = 0; j < k; ++j) {
        int from = P[j];
        int to = P[(j + 1) % k];
        for (int t = 0; t < sf[j].len; ++t) {
            // interior halves: left circle ascends (H), right descends (T);
            // the polygon corner chains force: ascending-interior circles pair
            // with descending side order and vice versa
            Id bottom_edge = bottom_left ? bl[((to - 1 - t) % m + m) % m] : br[(from + t) % m];
            Id top_edge = bottom_left ? br[(from + t) % m] : bl[((to - 1 - t) % m + m) % m];
            s.glue_boundary(s.twin(sf[j].p0[t]), bottom_edge);
            s.glue_boundary(s.twin(sf[j].pk[2 + t]), top_edge);
        }
    }
    for (int j = 0; j < k; ++j)
        for (int c = 0; c < k; ++c) diag_fwd[j][c] = d_fwd_side(j, c);

    // curve tags for the along-curve's new twins (annulus bottom halves)
    for (int i = 0; i < m; ++i) {
        Id h = interior_left[i];
        s.halves[s.twin(h)].curve = along;
        s.halves[s.twin(h)].along = false;
    }

    // frame transport: spokes zero, diagonals carry the sector arc sums
    if (frame_on) {
        s.frame = std::move(stash);
        s.frame_rank = fr;
        s.frame.resize(s.halves.size());
        // annulus boundary halves: negate across the new twin pairing
        for (size_t h = 0; h < s.halves.size(); ++h) {
            if (!s.halves[h].alive || !s.frame[h].empty()) continue;
            Id t = s.halves[h].twin;
            if (!s.frame[t].empty()) {
                s.frame[h] = s.frame[t];
                for (auto& x : s.frame[h]) x = -x;
            }
        }
        auto set_val = [&](Id h, const std::vector<long long>& v) {
            s.frame[h] = v;
            std::vector<long long> nv = v;
            for (auto& x : nv) x = -x;
            s.frame[s.twin(h)] = nv;
        };
        std::vector<long long> zero(fr, 0);
        for (int j = 0; j < k; ++j)
            for (int a = 0; a < k; ++a) set_val(spoke_down_side(j, a), zero);
        for (int j = 0; j < k; ++j) {
            // sector arc sum along the winding direction
            // sector arc sum in the curve direction
            std::vector<long long> sum(fr, 0);
            int from = P[j];
            for (int t = 0; t < sf[j].len; ++t) {
                Id ih = interior_left[(from + t) % m];
                if (s.frame[ih].empty()) fail("twist: frame hole on the curve");
                for (int q = 0; q < fr; ++q) sum[q] += s.frame[ih][q];
            }
            // bottom face relation fixes the diagonals: sides are twins of the
            // bottom circle's interior halves
            if (!bottom_left)
                for (auto& x : sum) x = -x;
            for (int c = 0; c < k; ++c) set_val(diag_fwd[j][c], sum);
        }
        // verify all new faces sum to zero
        for (int j = 0; j < k; ++j) {
            std::vector<Id> reps;
            reps.push_back(sf[j].p0[0]);
            reps.push_back(sf[j].pk[0]);
            for (auto& q : sf[j].quads) reps.push_back(q[0]);
            for (Id rep : reps) {
                std::vector<long long> acc(fr, 0);
                Id cur = rep;
                do {
                    if (s.frame[cur].empty()) fail("twist: frame hole in annulus");
                    for (int q = 0; q < fr; ++q) acc[q] += s.frame[cur][q];
                    cur = s.next(cur);
                } while (cur != rep);
                for (long long x : acc)
                    if (x != 0) fail("twist: frame transport inconsistent");
            }
        }
    }

    // re-chain the severed curves through the spirals
    // strand ordered index: order[j] is the strand at sector j's left spoke
    std::map<Id, std::pair<int, bool>> strand_by_invertex;  // in_half -> (sector index, enters_left)
    for (int j = 0; j < k; ++j) {
        const auto& st = cut.strands[order[j]];
        strand_by_invertex[st.in_half] = {j, st.enters_left};
    }
    auto spiral_chain = [&](int j0, bool forward) {
        std::vector<Id> chain;
        for (int t = 0; t < k; ++t) {
            int j = (j0 + t) % k;
            chain.push_back(diag_fwd[j][t]);
        }
        if (!forward) {
            std::reverse(chain.begin(), chain.end());
            for (auto& h : chain) h = s.twin(h);
        }
        return chain;
    };
    for (size_t c = 0; c < s.curves.size(); ++c) {
        CurveRec& cr = s.curves[c];
        if (!cr.alive || static_cast<Id>(c) == along) continue;
        std::vector<Id> rebuilt;
        bool touched = false;
        int n = static_cast<int>(cr.halves.size());
        for (int i = 0; i < n; ++i) {
            Id h = cr.halves[i];
            rebuilt.push_back(h);
            bool last = i + 1 == n;
            if (last && !cr.closed) break;
            Id nxt = cr.halves[last ? 0 : i + 1];
            if (s.head(h) == s.org(nxt)) continue;
            auto it = strand_by_invertex.find(h);
            if (it == strand_by_invertex.end()) fail("twist: broken curve without strand");
            touched = true;
            // ride the spiral bottom->top when entering on the bottom side
            auto chain = spiral_chain(it->second.first, it->second.second == bottom_left);
            for (Id d : chain) {
                s.halves[d].curve = static_cast<Id>(c);
                s.halves[d].along = true;
                s.halves[s.twin(d)].curve = static_cast<Id>(c);
                s.halves[s.twin(d)].along = false;
                rebuilt.push_back(d);
            }
        }
        if (touched) cr.halves = rebuilt;
    }
}

Id dehn_twist(Surface& s, Id target, Id along, bool right_handed) {
    twist_state(s, along, right_handed);
    return target;
}

namespace {

// junction tightness: the fan at transit (in -> out) on the given side must
// avoid the walk's own edges
bool fan_clear(const Surface& s, const std::vector<Id>& fan, const std::set<Id>& walk_edges) {
    for (Id f : fan)
        if (walk_edges.count(std::min(f, s.halves[f].twin))) return false;
    return true;
}

std::vector<Id> fan_for(const Surface& s, Id a, Id b, bool left) {
    Id back = s.twin(a);
    std::vector<Id> fan;
    if (b == back) return {kNone};  // U-turn marker
    if (left) {
        Id cur = s.rot_ccw(b);
        while (cur != back) {
            fan.push_back(cur);
            cur = s.rot_ccw(cur);
        }
    } else {
        Id cur = s.rot_ccw(back);
        while (cur != b) {
            fan.push_back(cur);
            cur = s.rot_ccw(cur);
        }
    }
    return fan;
}

std::vector<Id> rotate_to_start(const std::vector<Id>& cyc, Id v, const Surface& s) {
    for (size_t i = 0; i < cyc.size(); ++i)
        if (s.org(cyc[i]) == v) {
            std::vector<Id> out(cyc.begin() + i, cyc.end());
            out.insert(out.end(), cyc.begin(), cyc.begin() + i);
            return out;
        }
    fail("walk rotation: vertex not on cycle");
}

std::vector<Id> reversed_twins(const Surface& s, const std::vector<Id>& w) {
    std::vector<Id> out(w.rbegin(), w.rend());
    for (auto& h : out) h = s.twin(h);
    return out;
}

}  // namespace

Id band_sum(Surface& s, Id mover, Id over, Id band) {
    if (mover == over) fail("band_sum: mover equals over (self-slide)");
    const CurveRec& mc = s.curves[mover];
    const CurveRec& oc = s.curves[over];
    const CurveRec& bc = s.curves[band];
    if (!mc.closed || !oc.closed || bc.closed) fail("band_sum: bad inputs");
    if (s.raw_crossings(mover, over) != 0) fail("band_sum: mover and over must be disjoint");

    Id vm = s.org(bc.halves.front());
    Id vo = s.head(bc.halves.back());
    // vm must be a subdivision vertex of mover, vo of over
    auto on_curve = [&](Id v, const CurveRec& c) {
        for (Id h : c.halves)
            if (s.org(h) == v) return true;
        return false;
    };
    if (!on_curve(vm, mc) || !on_curve(vo, oc)) fail("band_sum: band not anchored on the curves");

    std::set<Id> walk_edges;
    for (Id h : mc.halves) walk_edges.insert(std::min(h, s.twin(h)));
    for (Id h : oc.halves) walk_edges.insert(std::min(h, s.twin(h)));
    for (Id h : bc.halves) walk_edges.insert(std::min(h, s.twin(h)));

    std::vector<Id> m_cycle = rotate_to_start(mc.halves, vm, s);
    std::vector<Id> band_fwd = bc.halves;
    std::vector<Id> band_rev = reversed_twins(s, band_fwd);

    std::vector<Id> result_chain;
    bool built = false;
    for (bool left : {true, false}) {
        for (bool fwd : {true, false}) {
            std::vector<Id> o_cycle = rotate_to_start(fwd ? oc.halves : reversed_twins(s, oc.halves), vo, s);
            std::vector<Id> walk = m_cycle;
            walk.insert(walk.end(), band_fwd.begin(), band_fwd.end());
            walk.insert(walk.end(), o_cycle.begin(), o_cycle.end());
            walk.insert(walk.end(), band_rev.begin(), band_rev.end());
            // check the four junction transits for tightness
            int n = static_cast<int>(walk.size());
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                Id a = walk[i], b = walk[(i + 1) % n];
                Id va = s.head(a);
                if (va != vm && va != vo) continue;
                auto fan = fan_for(s, a, b, left);
                if (fan.size() == 1 && fan[0] == kNone) {
                    ok = false;  // U-turn
                    break;
                }
                ok = fan_clear(s, fan, walk_edges);
            }
            if (!ok) continue;
            result_chain = shadow_walk_closed(s, walk, left);
            built = true;
            break;
        }
        if (built) break;
    }
    if (!built) fail("band_sum: no tight routing (unexpected band geometry)");

    Family fam = mc.fam;
    std::string name = mc.name;
    s.drop_curve(mover);
    s.drop_curve(band);
    return s.add_curve(fam, name, result_chain, true);
}

std::pair<Id, Id> resolve_once(Surface& s, Id c1, Id c2, Family fam, const std::string& base_name) {
    if (s.raw_crossings(c1, c2) != 1) fail("resolve_once: curves must cross exactly once");
    // the crossing vertex
    Id x = kNone;
    {
        std::set<Id> v1;
        for (Id h : s.curves[c1].halves) v1.insert(s.org(h));
        for (Id h : s.curves[c2].halves)
            if (v1.count(s.org(h))) x = s.org(h);
    }
    std::vector<Id> w1 = rotate_to_start(s.curves[c1].halves, x, s);
    std::vector<Id> w2 = rotate_to_start(s.curves[c2].halves, x, s);
    std::vector<Id> walk = w1;
    walk.insert(walk.end(), w2.begin(), w2.end());
    Id r1 = s.add_curve(fam, base_name + ":pos", shadow_walk_closed(s, walk, true), true);
    Id r2 = s.add_curve(fam, base_name + ":neg", shadow_walk_closed(s, walk, false), true);
    return {r1, r2};
}

void tube_drag(Surface& s, Id end_circle, Id path) {
    auto [r1, r2] = resolve_once(s, path, end_circle, Family::aux, "drag");
    twist_state(s, r1, true);
    twist_state(s, r2, false);
    s.drop_curve(r1);
    s.drop_curve(r2);
}

}  // namespace rtk
