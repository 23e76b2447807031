#include "rtk/curves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace rtk {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::logic_error("curves: " + msg); }
}  // namespace

Id face_orig(const Surface& s, Id f) {
    if (f == kNone) return kNone;
    Id o = s.faces[f].orig;
    return o == kNone ? f : o;
}

bool origs_adjacent(const Surface& s, Id a, Id b) {
    for (size_t h = 0; h < s.halves.size(); ++h) {
        if (!s.halves[h].alive) continue;
        Id f1 = s.halves[h].face, f2 = s.halves[s.halves[h].twin].face;
        if (f1 == kNone || f2 == kNone) continue;
        if (face_orig(s, f1) == a && face_orig(s, f2) == b) return true;
    }
    return false;
}

std::vector<Id> tube_transit(const Surface& s, const TubeCells& tc, Id enter_page_orig,
                             Id exit_page_orig) {
    int j = -1, k = -1;
    for (int i = 0; i < 4; ++i) {
        if (origs_adjacent(s, tc.ring_a[i], enter_page_orig)) j = i;
        if (origs_adjacent(s, tc.ring_b[i], exit_page_orig)) k = i;
    }
    if (j < 0 || k < 0) throw std::logic_error("tube_transit: page cells not at tube ends");
    std::vector<Id> cells;
    int d = ((k - j) % 4 + 4) % 4;
    int step = d <= 2 ? 1 : -1;
    for (int i = j; i != k; i = ((i + step) % 4 + 4) % 4) cells.push_back(tc.ring_a[i]);
    cells.push_back(tc.ring_a[k]);
    // climb the stack at angular position k: the two middle rings
    Id cur = tc.ring_a[k];
    for (int lvl = 0; lvl < 2; ++lvl) {
        // the next ring face: adjacent to cur, not a page cell, not already used
        Id nxt = kNone;
        for (size_t h = 0; h < s.halves.size(); ++h) {
            if (!s.halves[h].alive) continue;
            Id f1 = s.halves[h].face, f2 = s.halves[s.halves[h].twin].face;
            if (f1 == kNone || f2 == kNone) continue;
            if (face_orig(s, f1) != cur) continue;
            Id o2 = face_orig(s, f2);
            bool used = o2 == enter_page_orig;
            for (Id c : cells) used = used || c == o2;
            for (int i = 0; i < 4; ++i) used = used || o2 == tc.ring_a[i] || o2 == tc.ring_b[i];
            // middle rings are exactly the faces adjacent that are neither
            // page-adjacent rings nor already visited
            if (!used && s.halves[h].curve != kNone) {
                // marker interface edge: this is the climb direction
                nxt = o2;
                break;
            }
        }
        if (nxt == kNone) throw std::logic_error("tube_transit: climb failed");
        cells.push_back(nxt);
        cur = nxt;
    }
    cells.push_back(tc.ring_b[k]);
    return cells;
}

void make_hole(Surface& s, Id face, const std::string& label) {
    if (!s.faces[face].alive) fail("make_hole: dead face");
    Id h0 = s.faces[face].half;
    Id cur = h0;
    do {
        if (s.halves[s.halves[cur].twin].face == kNone) fail("make_hole: face touches boundary");
        if (s.halves[cur].curve != kNone) fail("make_hole: disk meets a curve");
        cur = s.halves[cur].next;
    } while (cur != h0);
    // the face cycle becomes a boundary loop; next/prev stay as they are
    cur = h0;
    do {
        s.halves[cur].face = kNone;
        cur = s.halves[cur].next;
    } while (cur != h0);
    s.faces[face].alive = false;
    s.notes["hole:" + label] = std::to_string(h0);
    s.invalidate_frame();
}

// ---------------------------------------------------------------------------
// page template
// ---------------------------------------------------------------------------

Page make_page(const std::vector<PageFeature>& features) {
    Page page;
    int nf = static_cast<int>(features.size());
    int cols = 2 * nf + 1;  // margin, then feature+gap pairs; last gap is margin
    if (nf == 0) cols = 1;
    page.cols = cols;
    page.features = features;
    Surface& s = page.s;

    // grid of 3 x cols quads; each add_polygon(4) then glue neighbours
    std::vector<std::array<std::vector<Id>, 3>> quad(cols);  // quad[c][r] = 4 halves
    page.cell.resize(cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < 3; ++r) {
            auto hs = quad[c][r] = s.add_polygon(4);
            page.cell[c][r] = s.halves[hs[0]].face;
        }
    // polygon halves: index 0 = bottom (w->e), 1 = east (s->n), 2 = top (e->w), 3 = west (n->s)
    // glue vertical neighbours: top edge of (c,r) to bottom edge of (c,r-1)... rows: r=0 top row.
    // Use: row r, rows stack r=0 (top) to r=2 (bottom). Glue bottom of (c,r) to top of (c,r+1).
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r + 1 < 3; ++r)
            s.glue_boundary(s.halves[quad[c][r][0]].twin, s.halves[quad[c][r + 1][2]].twin);
    // glue horizontal neighbours: east of (c,r) to west of (c+1,r)
    for (int c = 0; c + 1 < cols; ++c)
        for (int r = 0; r < 3; ++r)
            s.glue_boundary(s.halves[quad[c][r][1]].twin, s.halves[quad[c + 1][r][3]].twin);

    s.notes["page"] = "1";
    // features sit at columns 1,3,5,...
    for (int i = 0; i < nf; ++i) {
        int col = 2 * i + 1;
        page.feature_col.push_back(col);
        if (features[i].kind == PageFeature::hole) {
            make_hole(s, page.mid(col), features[i].label);
            page.cell[col][1] = kNone;
        }
    }
    return page;
}

int attach_tube(Surface& s, Id face_a, Id face_b, const std::string& label, TubeCells* cells) {
    if (face_a == face_b) fail("attach_tube: identical disks");
    if (face_a == kNone || face_b == kNone || !s.faces[face_a].alive || !s.faces[face_b].alive)
        fail("attach_tube: unknown disk label");
    // count sides (must match)
    auto sides_of = [&](Id f) {
        std::vector<Id> hs;
        Id h0 = s.faces[f].half;
        Id cur = h0;
        do {
            hs.push_back(cur);
            cur = s.halves[cur].next;
        } while (cur != h0);
        return hs;
    };
    std::vector<Id> ha = sides_of(face_a), hb = sides_of(face_b);
    int n = static_cast<int>(ha.size());
    if (static_cast<int>(hb.size()) != n) fail("attach_tube: side counts differ");

    make_hole(s, face_a, label + ":a");
    make_hole(s, face_b, label + ":b");

    // four stacked rings of n quads; marker circles live on ring-ring
    // interfaces so that gluing interfaces stay free of curves
    std::vector<std::vector<Id>> R[4];
    for (int r = 0; r < 4; ++r) {
        R[r].resize(n);
        for (int k = 0; k < n; ++k) R[r][k] = s.add_polygon(4);
    }
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < n; ++k) {
            int j = (k + 1) % n;
            s.glue_boundary(s.halves[R[r][k][1]].twin, s.halves[R[r][j][3]].twin);
        }
    // stack: top of R[r][k] to bottom of R[r+1][k]
    for (int r = 0; r + 1 < 4; ++r)
        for (int k = 0; k < n; ++k)
            s.glue_boundary(s.halves[R[r][k][2]].twin, s.halves[R[r + 1][k][0]].twin);

    // glue bottom circle of R[0] over hole a, top circle of R[3] over hole b
    for (int k = 0; k < n; ++k) s.glue_boundary(ha[k], s.halves[R[0][k][0]].twin);
    for (int k = 0; k < n; ++k) s.glue_boundary(hb[k], s.halves[R[3][(n - k) % n][2]].twin);

    // markers: assemble the three interface circles by walking
    auto assemble_cycle = [&](std::vector<Id> seed) {
        std::set<Id> edges;
        for (Id h : seed) edges.insert(std::min(h, s.halves[h].twin));
        std::vector<Id> walk;
        Id cur = seed[0];
        for (size_t i = 0; i < seed.size(); ++i) {
            walk.push_back(cur);
            Id v = s.head(cur);
            Id nxt = kNone;
            for (Id cand : seed) {
                for (Id d : {cand, s.halves[cand].twin}) {
                    if (d == s.halves[cur].twin || d == cur) continue;
                    if (s.org(d) == v && edges.count(std::min(d, s.halves[d].twin))) nxt = d;
                }
            }
            if (nxt == kNone && i + 1 < seed.size()) fail("attach_tube: circle walk broken");
            cur = nxt;
        }
        if (s.head(walk.back()) != s.org(walk.front())) fail("attach_tube: circle not closing");
        return walk;
    };
    std::vector<Id> enda, waist, endb;
    for (int k = 0; k < n; ++k) enda.push_back(R[0][k][2]);   // R0|R1 interface
    for (int k = 0; k < n; ++k) waist.push_back(R[1][k][2]);  // R1|R2
    for (int k = 0; k < n; ++k) endb.push_back(R[2][k][2]);   // R2|R3
    enda = assemble_cycle(enda);
    waist = assemble_cycle(waist);
    endb = assemble_cycle(endb);

    TubeRecord rec;
    rec.label = label;
    rec.ends[0] = s.add_curve(Family::marker, label + ":enda", enda, true);
    rec.waist = s.add_curve(Family::marker, label + ":waist", waist, true);
    rec.ends[1] = s.add_curve(Family::marker, label + ":endb", endb, true);
    s.tubes.push_back(rec);

    if (cells) {
        for (int k = 0; k < std::min(n, 4); ++k) {
            cells->ring_a[k] = s.halves[R[0][k][0]].face;
            cells->ring_b[k] = s.halves[R[3][k][0]].face;
        }
        cells->waist = rec.waist;
        cells->end_a = rec.ends[0];
        cells->end_b = rec.ends[1];
        cells->tube_index = static_cast<int>(s.tubes.size()) - 1;
    }
    s.invalidate_frame();
    return static_cast<int>(s.tubes.size()) - 1;
}

// ---------------------------------------------------------------------------
// routing
// ---------------------------------------------------------------------------

namespace {

// all current faces descending from original face `of`
std::vector<Id> subfaces_of(const Surface& s, Id of) {
    std::vector<Id> out;
    for (size_t f = 0; f < s.faces.size(); ++f)
        if (s.faces[f].alive && face_orig(s, static_cast<Id>(f)) == of) out.push_back(static_cast<Id>(f));
    return out;
}

struct ChordPlan {
    std::vector<Id> crossed;  // halves to cross, in order (stable ids)
    Id start_face = kNone;
};

// plan a chord inside original face `of` from vertex `from` to either a door
// half (both-side origs of/to_orig) or to the specific vertex `to_vertex`.
struct DoorTarget {
    Id to_orig = kNone;    // target neighbouring original face
    Id to_vertex = kNone;  // or exact vertex
};

bool plan_chord(const Surface& s, Id of, Id from, const DoorTarget& target, ChordPlan& plan, Id& door_half) {
    struct Cost {
        int curves = 0, steps = 0;
        bool operator<(const Cost& o) const {
            return curves != o.curves ? curves < o.curves : steps < o.steps;
        }
    };
    std::map<Id, Cost> dist;
    std::map<Id, std::pair<Id, Id>> parent;  // face -> (prev face, crossed half)
    using QE = std::pair<std::pair<int, int>, Id>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;

    for (size_t h = 0; h < s.halves.size(); ++h) {
        if (!s.halves[h].alive || s.halves[h].org != from) continue;
        Id f = s.halves[h].face;
        if (f == kNone || face_orig(s, f) != of) continue;
        if (!dist.count(f)) {
            dist[f] = {};
            pq.push({{0, 0}, f});
        }
    }
    if (dist.empty()) return false;

    auto goal_on = [&](Id f) -> Id {
        Id h0 = s.faces[f].half;
        Id cur = h0;
        do {
            if (target.to_orig != kNone) {
                Id tf = s.halves[s.halves[cur].twin].face;
                if (tf != kNone && face_orig(s, tf) == target.to_orig) return cur;
            } else {
                if (s.halves[cur].org == target.to_vertex) return cur;
            }
            cur = s.halves[cur].next;
        } while (cur != h0);
        return kNone;
    };

    Id goal_face = kNone, goal_half = kNone;
    std::set<Id> done;
    while (!pq.empty()) {
        auto [cost, f] = pq.top();
        (void)cost;
        pq.pop();
        if (done.count(f)) continue;
        done.insert(f);
        if (Id gh = goal_on(f); gh != kNone) {
            goal_face = f;
            goal_half = gh;
            break;
        }
        Id h0 = s.faces[f].half;
        Id cur = h0;
        do {
            Id tf = s.halves[s.halves[cur].twin].face;
            if (tf != kNone && face_orig(s, tf) == of && !done.count(tf)) {
                Cost c = dist[f];
                c.curves += s.halves[cur].curve != kNone ? 1 : 0;
                c.steps += 1;
                if (!dist.count(tf) || c < dist[tf]) {
                    dist[tf] = c;
                    parent[tf] = {f, cur};
                    pq.push({{c.curves, c.steps}, tf});
                }
            }
            cur = s.halves[cur].next;
        } while (cur != h0);
    }
    if (goal_face == kNone) return false;
    std::vector<Id> rev;
    Id f = goal_face;
    while (parent.count(f)) {
        rev.push_back(parent[f].second);
        f = parent[f].first;
    }
    std::reverse(rev.begin(), rev.end());
    plan.crossed = rev;
    plan.start_face = f;
    door_half = goal_half;
    return true;
}

// half at vertex v on the cycle of face f; fails if absent or ambiguous
Id vertex_half_on_face(const Surface& s, Id v, Id f) {
    Id found = kNone;
    Id h0 = s.faces[f].half;
    Id cur = h0;
    do {
        if (s.halves[cur].org == v) {
            if (found != kNone) fail("vertex appears twice on face");
            found = cur;
        }
        cur = s.halves[cur].next;
    } while (cur != h0);
    if (found == kNone) fail("vertex not on face");
    return found;
}

// realize a planned chord from vertex `from`; returns the final vertex
Id realize_chord(Surface& s, Id from, const ChordPlan& plan, Id door_half, bool door_is_vertex,
                 std::vector<Id>& new_halves) {
    Id w_prev = from;
    Id f_cur = plan.start_face;
    auto connect_in = [&](Id w, Id f) {
        Id ha = vertex_half_on_face(s, w_prev, f);
        Id hb = vertex_half_on_face(s, w, f);
        new_halves.push_back(s.split_face(ha, hb));
        w_prev = w;
    };
    auto cross = [&](Id ch) {
        Id fa = s.face(ch), fb = s.face(s.twin(ch));
        if (fa != f_cur && fb != f_cur) fail("realize_chord: lost face track");
        Id f_next = fa == f_cur ? fb : fa;
        Id m = s.split_edge(ch);
        connect_in(m, f_cur);
        f_cur = f_next;
    };
    for (Id ch : plan.crossed) cross(ch);
    if (door_is_vertex) {
        connect_in(s.org(door_half), f_cur);
    } else {
        cross(door_half);
    }
    return w_prev;
}

}  // namespace

Id route_closed_curve(Surface& s, Family fam, const std::string& name, const std::vector<Id>& cells) {
    int n = static_cast<int>(cells.size());
    if (n < 2) fail("route_closed_curve: need at least 2 cells");
    Id first_door = kNone;
    for (Id f : subfaces_of(s, cells[0])) {
        Id h0 = s.faces[f].half;
        Id cur = h0;
        do {
            Id tf = s.halves[s.halves[cur].twin].face;
            if (tf != kNone && face_orig(s, tf) == cells[1])
                if (first_door == kNone || cur < first_door) first_door = cur;
            cur = s.halves[cur].next;
        } while (cur != h0);
    }
    if (first_door == kNone) fail("route_closed_curve: cells 0/1 not adjacent (" + name + ")");
    Id v0 = s.split_edge(first_door);

    std::vector<Id> all_halves;
    Id v = v0;
    // chords inside cells[1] .. cells[n-1], each exiting through the next door
    for (int i = 1; i < n; ++i) {
        DoorTarget t;
        t.to_orig = cells[(i + 1) % n];
        ChordPlan plan;
        Id door = kNone;
        if (!plan_chord(s, cells[i], v, t, plan, door))
            fail("route_closed_curve: no route in cell " + std::to_string(i) + " of " + name);
        v = realize_chord(s, v, plan, door, false, all_halves);
    }
    // closing chord inside cells[0] back to the first crossing
    {
        DoorTarget t;
        t.to_vertex = v0;
        ChordPlan plan;
        Id door = kNone;
        if (!plan_chord(s, cells[0], v, t, plan, door))
            fail("route_closed_curve: no closing route of " + name);
        v = realize_chord(s, v, plan, door, true, all_halves);
    }
    return s.add_curve(fam, name, all_halves, true);
}

Id route_arc(Surface& s, Family fam, const std::string& name, Id start_bhalf,
             const std::vector<Id>& cells, Id end_bhalf) {
    if (cells.empty()) fail("route_arc: no cells");
    if (s.halves[start_bhalf].face != kNone || s.halves[end_bhalf].face != kNone)
        fail("route_arc: anchors must be boundary halves");
    Id v0 = s.split_edge(start_bhalf);
    // v0 created on the boundary edge; start routing inside cells[0]
    Id vend = s.split_edge(end_bhalf);
    std::vector<Id> all_halves;
    Id v = v0;
    for (size_t i = 0; i < cells.size(); ++i) {
        DoorTarget t;
        bool last = i + 1 == cells.size();
        if (!last)
            t.to_orig = cells[i + 1];
        else
            t.to_vertex = vend;
        ChordPlan plan;
        Id door = kNone;
        if (!plan_chord(s, cells[i], v, t, plan, door))
            fail("route_arc: no route in cell " + std::to_string(i) + " of " + name);
        v = realize_chord(s, v, plan, door, last, all_halves);
    }
    return s.add_curve(fam, name, all_halves, false);
}

// ---------------------------------------------------------------------------
// shadows
// ---------------------------------------------------------------------------

namespace {

// fan of out-halves at the transit from in-half `a` to out-half `b`,
// on the requested side, in shadow-crossing order
std::vector<Id> transit_fan(const Surface& s, Id a, Id b, bool left) {
    Id back = s.twin(a);
    if (b == back) fail("shadow: U-turn in walk");
    std::vector<Id> fan;
    if (left) {
        Id cur = s.rot_ccw(b);
        while (cur != back) {
            fan.push_back(cur);
            cur = s.rot_ccw(cur);
            if (fan.size() > s.halves.size()) fail("shadow: rotation runaway");
        }
        std::reverse(fan.begin(), fan.end());
    } else {
        Id cur = s.rot_ccw(back);
        while (cur != b) {
            fan.push_back(cur);
            cur = s.rot_ccw(cur);
            if (fan.size() > s.halves.size()) fail("shadow: rotation runaway");
        }
    }
    return fan;
}

struct Station {
    Id vertex;
    Id landing;  // half at vertex in whose corner the incoming chord lands
    Id depart;   // half at vertex in whose corner the outgoing chord starts
};

// split the fan half f (org = transit vertex); returns the station
Station cross_fan_half(Surface& s, Id f, bool left) {
    Id m = s.split_edge(f);
    Id cont = kNone, back = kNone;
    for (size_t h = 0; h < s.halves.size(); ++h) {
        if (!s.halves[h].alive || s.halves[h].org != m) continue;
        if (s.head(static_cast<Id>(h)) == s.org(f))
            back = static_cast<Id>(h);
        else
            cont = static_cast<Id>(h);
    }
    if (cont == kNone || back == kNone) fail("shadow: bad station");
    Station st;
    st.vertex = m;
    st.landing = left ? cont : back;
    st.depart = left ? back : cont;
    return st;
}

std::vector<Id> chain_stations(Surface& s, const std::vector<Station>& st, bool closed) {
    std::vector<Id> chain;
    size_t n = st.size();
    size_t last = closed ? n : n - 1;
    for (size_t i = 0; i < last; ++i) {
        Id ha = st[i].depart, hb = st[(i + 1) % n].landing;
        if (s.face(ha) != s.face(hb)) fail("shadow: stations not co-facial");
        chain.push_back(s.split_face(ha, hb));
    }
    return chain;
}

}  // namespace

std::vector<Id> shadow_walk_closed(Surface& s, const std::vector<Id>& walk, bool left_side) {
    int m = static_cast<int>(walk.size());
    std::vector<Station> stations;
    for (int i = 0; i < m; ++i) {
        auto fan = transit_fan(s, walk[i], walk[(i + 1) % m], left_side);
        for (Id f : fan) stations.push_back(cross_fan_half(s, f, left_side));
    }
    if (stations.empty()) fail("shadow_walk_closed: nothing to cross (walk bounds a face)");
    return chain_stations(s, stations, true);
}

std::vector<Id> shadow_open(Surface& s, const std::vector<Id>& path, bool left_side, Id pre_half,
                            Id post_half) {
    // pre_half: stub from the start-attach vertex into the path's first
    // vertex; post_half: stub from the path's last vertex to the end-attach.
    if (path.empty()) fail("shadow_open: empty path");
    if (s.head(pre_half) != s.org(path.front())) fail("shadow_open: pre stub mismatch");
    if (s.org(post_half) != s.head(path.back())) fail("shadow_open: post stub mismatch");

    std::vector<Station> stations;
    // start attach: the vertex org(pre_half); depart corner by side
    {
        Station st;
        st.vertex = s.org(pre_half);
        st.landing = kNone;
        if (left_side) {
            st.depart = pre_half;
        } else {
            // the other out-half at the attach vertex (fresh degree-2 split)
            Id other = kNone;
            for (size_t h = 0; h < s.halves.size(); ++h)
                if (s.halves[h].alive && s.halves[h].org == st.vertex && static_cast<Id>(h) != pre_half)
                    other = static_cast<Id>(h);
            if (other == kNone) fail("shadow_open: start attach not degree 2");
            st.depart = other;
        }
        stations.push_back(st);
    }
    std::vector<Id> ext{pre_half};
    ext.insert(ext.end(), path.begin(), path.end());
    ext.push_back(post_half);
    for (size_t i = 0; i + 1 < ext.size(); ++i) {
        auto fan = transit_fan(s, ext[i], ext[i + 1], left_side);
        for (Id f : fan) stations.push_back(cross_fan_half(s, f, left_side));
    }
    {
        Station st;
        st.vertex = s.head(post_half);
        st.depart = kNone;
        Id tw = s.twin(post_half);  // out-half of the attach vertex back along the stub
        if (!left_side) {
            st.landing = tw;
        } else {
            Id other = kNone;
            for (size_t h = 0; h < s.halves.size(); ++h)
                if (s.halves[h].alive && s.halves[h].org == st.vertex && static_cast<Id>(h) != tw)
                    other = static_cast<Id>(h);
            if (other == kNone) fail("shadow_open: end attach not degree 2");
            st.landing = other;
        }
        stations.push_back(st);
    }
    return chain_stations(s, stations, false);
}

Id parallel_copy(Surface& s, Id curve, bool left_side, Family fam, const std::string& name) {
    const CurveRec& c = s.curves[curve];
    if (!c.closed) fail("parallel_copy: open curve");
    auto chain = shadow_walk_closed(s, c.halves, left_side);
    return s.add_curve(fam, name, chain, true);
}

void cleanup(Surface& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t h = 0; h < s.halves.size(); ++h) {
            const Half& H = s.halves[h];
            if (!H.alive || H.curve != kNone) continue;
            Id t = H.twin;
            Id f1 = H.face, f2 = s.halves[t].face;
            if (f1 == kNone || f2 == kNone || f1 == f2) continue;
            if (face_orig(s, f1) != face_orig(s, f2)) continue;  // door: keep
            if (s.next(static_cast<Id>(h)) == t || s.next(t) == static_cast<Id>(h)) continue;
            s.merge_faces(static_cast<Id>(h));
            changed = true;
        }
        // dissolve plain degree-2 vertices (also on doors)
        std::map<Id, std::vector<Id>> at;
        for (size_t h = 0; h < s.halves.size(); ++h)
            if (s.halves[h].alive) at[s.halves[h].org].push_back(static_cast<Id>(h));
        for (auto& [v, hs] : at) {
            if (hs.size() != 2) continue;
            if (s.halves[hs[0]].curve != s.halves[hs[1]].curve) continue;
            if (s.halves[hs[0]].twin == hs[1]) continue;  // bigon edge pair; leave
            // don't fuse across different original edges of a door path:
            // harmless to fuse anyway for plain edges; for curve edges the
            // curve record is updated by dissolve_vertex
            s.dissolve_vertex(v);
            changed = true;
        }
    }
}

Page build_surface(int g, int b) {
    if (b < 1) throw std::invalid_argument("build_surface: b must be >= 1 (surfaces here have boundary)");
    if (g < 0) throw std::invalid_argument("build_surface: negative genus");
    std::vector<PageFeature> feats;
    for (int i = 0; i < g; ++i) {
        feats.push_back({PageFeature::tube_end, "t" + std::to_string(i) + ":a"});
        feats.push_back({PageFeature::tube_end, "t" + std::to_string(i) + ":b"});
    }
    for (int i = 1; i < b; ++i) feats.push_back({PageFeature::hole, "h" + std::to_string(i)});
    Page page = make_page(feats);
    for (int i = 0; i < g; ++i) {
        Id fa = page.mid(page.feature_col[2 * i]);
        Id fb = page.mid(page.feature_col[2 * i + 1]);
        TubeCells tc;
        attach_tube(page.s, fa, fb, "t" + std::to_string(i), &tc);
        page.cell[page.feature_col[2 * i]][1] = kNone;
        page.cell[page.feature_col[2 * i + 1]][1] = kNone;
        page.tube_cells.push_back(tc);
    }
    return page;
}

}  // namespace rtk
