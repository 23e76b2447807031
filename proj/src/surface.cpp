#include "rtk/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rtk {

const char* family_name(Family f) {
    switch (f) {
        case Family::alpha: return "alpha";
        case Family::beta: return "beta";
        case Family::gamma: return "gamma";
        case Family::delta: return "delta";
        case Family::epsilon: return "epsilon";
        case Family::eta: return "eta";
        case Family::marker: return "marker";
        case Family::aux: return "aux";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::alpha, Family::beta, Family::gamma, Family::delta, Family::epsilon,
                     Family::eta, Family::marker, Family::aux})
        if (s == family_name(f)) return f;
    throw std::invalid_argument("unknown family: " + s);
}

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::logic_error("surface: " + msg); }
}  // namespace

int Surface::n_vertices() const {
    int n = 0;
    for (const auto& v : verts) n += v.alive;
    return n;
}

int Surface::n_edges() const {
    int n = 0;
    for (size_t h = 0; h < halves.size(); ++h)
        if (halves[h].alive && static_cast<Id>(h) < halves[h].twin) ++n;
    return n;
}

int Surface::n_faces() const {
    int n = 0;
    for (const auto& f : faces) n += f.alive;
    return n;
}

int Surface::n_boundary_circles() const {
    std::vector<char> seen(halves.size(), 0);
    int n = 0;
    for (size_t h = 0; h < halves.size(); ++h) {
        if (!halves[h].alive || halves[h].face != kNone || seen[h]) continue;
        ++n;
        Id cur = static_cast<Id>(h);
        do {
            seen[cur] = 1;
            cur = halves[cur].next;
        } while (cur != static_cast<Id>(h));
    }
    return n;
}

namespace {
// component index per face, via edge adjacency
std::vector<int> face_components(const Surface& s, int& count) {
    std::vector<int> comp(s.faces.size(), -1);
    count = 0;
    for (size_t f0 = 0; f0 < s.faces.size(); ++f0) {
        if (!s.faces[f0].alive || comp[f0] >= 0) continue;
        std::vector<Id> stack{static_cast<Id>(f0)};
        comp[f0] = count;
        while (!stack.empty()) {
            Id f = stack.back();
            stack.pop_back();
            Id h0 = s.faces[f].half;
            Id h = h0;
            do {
                Id g = s.halves[s.halves[h].twin].face;
                if (g != kNone && comp[g] < 0) {
                    comp[g] = comp[f];
                    stack.push_back(g);
                }
                h = s.halves[h].next;
            } while (h != h0);
        }
        ++count;
    }
    return comp;
}
}  // namespace

bool Surface::connected() const { return n_components() <= 1; }

int Surface::n_components() const {
    int count = 0;
    face_components(*this, count);
    return count;
}

std::vector<std::pair<int, int>> Surface::component_summary() const {
    int count = 0;
    std::vector<int> comp = face_components(*this, count);
    std::vector<int> V(count, 0), E(count, 0), F(count, 0), B(count, 0);

    std::set<Id> vseen;
    for (size_t h = 0; h < halves.size(); ++h) {
        const Half& hh = halves[h];
        if (!hh.alive) continue;
        int c = hh.face != kNone ? comp[hh.face] : comp[halves[hh.twin].face];
        if (static_cast<Id>(h) < hh.twin) ++E[c];
        if (!vseen.count(hh.org)) {
            vseen.insert(hh.org);
            ++V[c];
        }
    }
    for (size_t f = 0; f < faces.size(); ++f)
        if (faces[f].alive) ++F[comp[f]];

    std::vector<char> seen(halves.size(), 0);
    for (size_t h = 0; h < halves.size(); ++h) {
        if (!halves[h].alive || halves[h].face != kNone || seen[h]) continue;
        int c = comp[halves[halves[h].twin].face];
        ++B[c];
        Id cur = static_cast<Id>(h);
        do {
            seen[cur] = 1;
            cur = halves[cur].next;
        } while (cur != static_cast<Id>(h));
    }

    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < count; ++c) {
        int chi = V[c] - E[c] + F[c];
        int g = (2 - chi - B[c]) / 2;
        out.emplace_back(g, B[c]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Surface::genus() const {
    if (!connected()) fail("genus of disconnected complex");
    return (2 - euler() - n_boundary_circles()) / 2;
}

Id Surface::new_vertex() {
    verts.push_back({kNone, true});
    return static_cast<Id>(verts.size()) - 1;
}

Id Surface::new_half() {
    halves.push_back({});
    halves.back().alive = true;
    if (!frame.empty()) frame.resize(halves.size());
    return static_cast<Id>(halves.size()) - 1;
}

Id Surface::new_face_rec() {
    FaceRec f;
    f.alive = true;
    faces.push_back(f);
    Id id = static_cast<Id>(faces.size()) - 1;
    faces[id].orig = id;
    return id;
}

std::vector<Id> Surface::add_polygon(int n) {
    if (n < 2) fail("add_polygon: n < 2");
    Id f = new_face_rec();
    std::vector<Id> vs(n), as(n), bs(n);
    for (int i = 0; i < n; ++i) vs[i] = new_vertex();
    for (int i = 0; i < n; ++i) {
        as[i] = new_half();
        bs[i] = new_half();
    }
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n, k = (i + n - 1) % n;
        Half& a = halves[as[i]];
        a.twin = bs[i];
        a.next = as[j];
        a.prev = as[k];
        a.face = f;
        a.org = vs[i];
        Half& b = halves[bs[i]];
        b.twin = as[i];
        b.next = bs[k];
        b.prev = bs[j];
        b.face = kNone;
        b.org = vs[j];
        verts[vs[i]].out = as[i];
    }
    faces[f].half = as[0];
    return as;
}

void Surface::glue_boundary(Id ha, Id hb) {
    if (halves[ha].face != kNone || halves[hb].face != kNone) fail("glue_boundary: not boundary halves");
    if (ha == hb || halves[ha].twin == hb) fail("glue_boundary: self");
    Id ta = halves[ha].twin, tb = halves[hb].twin;
    // ta: u1->u2, tb: w1->w2; identify u1=w2, u2=w1
    Id u1 = halves[ta].org, u2 = halves[ha].org;
    Id w1 = halves[tb].org, w2 = halves[hb].org;

    Id pa = halves[ha].prev, na = halves[ha].next;
    Id pb = halves[hb].prev, nb = halves[hb].next;

    halves[ha].alive = false;
    halves[hb].alive = false;
    halves[ta].twin = tb;
    halves[tb].twin = ta;

    if (pa != hb) {
        halves[pa].next = nb;
        halves[nb].prev = pa;
    }
    if (pb != ha) {
        halves[pb].next = na;
        halves[na].prev = pb;
    }

    auto merge = [&](Id keep, Id drop) {
        if (keep == drop || !verts[drop].alive) return;
        for (auto& h : halves)
            if (h.alive && h.org == drop) h.org = keep;
        verts[drop].alive = false;
    };
    merge(u2, w1);
    merge(u1, w2);
    verts[u1].out = ta;
    verts[u2].out = tb;
    invalidate_frame();
}

Id Surface::split_edge(Id h) {
    Id t = halves[h].twin;
    Id m = new_vertex();
    Id h2 = new_half(), t2 = new_half();

    halves[h2].face = halves[h].face;
    halves[h2].org = m;
    halves[h2].curve = halves[h].curve;
    halves[h2].along = halves[h].along;
    halves[t2].face = halves[t].face;
    halves[t2].org = m;
    halves[t2].curve = halves[t].curve;
    halves[t2].along = halves[t].along;

    halves[h2].next = halves[h].next;
    halves[halves[h].next].prev = h2;
    halves[h2].prev = h;
    halves[h].next = h2;

    halves[t2].next = halves[t].next;
    halves[halves[t].next].prev = t2;
    halves[t2].prev = t;
    halves[t].next = t2;

    halves[h].twin = t2;
    halves[t2].twin = h;
    halves[h2].twin = t;
    halves[t].twin = h2;

    verts[m].out = h2;

    if (halves[h].curve != kNone) {
        CurveRec& c = curves[halves[h].curve];
        for (size_t i = 0; i < c.halves.size(); ++i) {
            if (c.halves[i] == h) {
                c.halves.insert(c.halves.begin() + i + 1, h2);
                break;
            }
            if (c.halves[i] == t) {
                c.halves.insert(c.halves.begin() + i + 1, t2);
                break;
            }
        }
    }
    if (!frame.empty()) {
        frame.resize(halves.size());
        frame[h2].assign(frame_rank, 0);
        frame[t2].assign(frame_rank, 0);
    }
    return m;
}

Id Surface::split_face(Id ha, Id hb) {
    if (halves[ha].face == kNone || halves[ha].face != halves[hb].face) fail("split_face: faces differ");
    if (ha == hb) fail("split_face: same half");
    Id A = halves[ha].org, B = halves[hb].org;
    if (A == B) fail("split_face: same vertex");
    Id fold = halves[ha].face;

    Id e1 = new_half(), e2 = new_half();
    Id pa = halves[ha].prev, pb = halves[hb].prev;

    halves[e1].twin = e2;
    halves[e2].twin = e1;
    halves[e1].org = A;
    halves[e2].org = B;

    // cycle 1: e1 -> hb ... pa -> e1   (keeps record fold)
    halves[e1].next = hb;
    halves[hb].prev = e1;
    halves[pa].next = e1;
    halves[e1].prev = pa;
    halves[e1].face = fold;
    faces[fold].half = e1;

    // cycle 2: e2 -> ha ... pb -> e2   (new face)
    Id fnew = new_face_rec();
    faces[fnew].orig = faces[fold].orig;
    halves[e2].next = ha;
    halves[ha].prev = e2;
    halves[pb].next = e2;
    halves[e2].prev = pb;
    halves[e2].face = fnew;
    faces[fnew].half = e2;
    for (Id h = ha; h != e2; h = halves[h].next) halves[h].face = fnew;

    if (!frame.empty()) {
        frame.resize(halves.size());
        std::vector<long long> acc(frame_rank, 0);
        bool ok = true;
        for (Id h = ha; h != e2; h = halves[h].next) {
            if (frame[h].empty()) {
                ok = false;
                break;
            }
            for (int i = 0; i < frame_rank; ++i) acc[i] += frame[h][i];
        }
        if (ok) {
            frame[e2].resize(frame_rank);
            frame[e1].resize(frame_rank);
            for (int i = 0; i < frame_rank; ++i) {
                frame[e2][i] = -acc[i];
                frame[e1][i] = acc[i];
            }
        } else {
            frame[e1].clear();
            frame[e2].clear();
        }
    }
    return e1;
}

void Surface::merge_faces(Id h) {
    Id t = halves[h].twin;
    Id f1 = halves[h].face, f2 = halves[t].face;
    if (f1 == kNone || f2 == kNone || f1 == f2) fail("merge_faces: bad edge");
    if (halves[h].curve != kNone) fail("merge_faces: curve edge");
    Id ph = halves[h].prev, nh = halves[h].next;
    Id pt = halves[t].prev, nt = halves[t].next;
    if (nh == t || nt == h) fail("merge_faces: spur edge");

    for (Id x = faces[f2].half;;) {
        halves[x].face = f1;
        x = halves[x].next;
        if (x == faces[f2].half) break;
    }
    halves[ph].next = nt;
    halves[nt].prev = ph;
    halves[pt].next = nh;
    halves[nh].prev = pt;
    halves[h].alive = false;
    halves[t].alive = false;
    faces[f2].alive = false;
    faces[f1].half = nh;
    if (verts[halves[nh].org].out == h || verts[halves[nh].org].out == t) verts[halves[nh].org].out = nh;
    if (verts[halves[nt].org].out == h || verts[halves[nt].org].out == t) verts[halves[nt].org].out = nt;
}

void Surface::dissolve_vertex(Id v) {
    std::vector<Id> out;
    for (size_t h = 0; h < halves.size(); ++h)
        if (halves[h].alive && halves[h].org == v) out.push_back(static_cast<Id>(h));
    if (out.size() != 2) fail("dissolve_vertex: degree != 2");
    Id a = out[0], b = out[1];
    Id ta = halves[a].twin, tb = halves[b].twin;
    if (halves[a].curve != halves[b].curve) fail("dissolve_vertex: mixed curves");
    if (halves[ta].next != b || halves[tb].next != a) fail("dissolve_vertex: unexpected corners");

    if (halves[a].curve != kNone) {
        CurveRec& c = curves[halves[a].curve];
        for (size_t i = 0; i < c.halves.size(); ++i) {
            if (halves[c.halves[i]].org == v) {
                c.halves.erase(c.halves.begin() + i);
                break;
            }
        }
    }
    if (!frame.empty() && !frame[ta].empty() && !frame[b].empty()) {
        for (int i = 0; i < frame_rank; ++i) frame[ta][i] += frame[b][i];
        frame[tb] = frame[ta];
        for (auto& x : frame[tb]) x = -x;
    }
    halves[ta].twin = tb;
    halves[tb].twin = ta;
    halves[ta].next = halves[b].next;
    halves[halves[b].next].prev = ta;
    halves[tb].next = halves[a].next;
    halves[halves[a].next].prev = tb;
    halves[a].alive = false;
    halves[b].alive = false;
    verts[v].alive = false;
    if (halves[ta].face != kNone) faces[halves[ta].face].half = ta;
    if (halves[tb].face != kNone) faces[halves[tb].face].half = tb;
    if (verts[halves[ta].org].alive && (verts[halves[ta].org].out == b)) verts[halves[ta].org].out = ta;
    if (verts[halves[tb].org].alive && (verts[halves[tb].org].out == a)) verts[halves[tb].org].out = tb;
    verts[halves[ta].org].out = ta;
    verts[halves[tb].org].out = tb;
}

Id Surface::cap_boundary(Id h) {
    if (halves[h].face != kNone) fail("cap_boundary: not boundary");
    Id f = new_face_rec();
    faces[f].half = h;
    Id cur = h;
    do {
        halves[cur].face = f;
        cur = halves[cur].next;
    } while (cur != h);
    invalidate_frame();
    return f;
}

Id Surface::add_curve(Family fam, std::string name, std::vector<Id> hs, bool closed) {
    CurveRec c;
    c.fam = fam;
    c.name = std::move(name);
    c.halves = std::move(hs);
    c.closed = closed;
    c.alive = true;
    curves.push_back(c);
    Id cid = static_cast<Id>(curves.size()) - 1;
    for (Id h : curves[cid].halves) {
        halves[h].curve = cid;
        halves[h].along = true;
        halves[halves[h].twin].curve = cid;
        halves[halves[h].twin].along = false;
    }
    return cid;
}

void Surface::drop_curve(Id c) {
    if (!curves[c].alive) return;
    for (Id h : curves[c].halves) {
        if (!halves[h].alive) continue;
        halves[h].curve = kNone;
        halves[h].along = false;
        halves[halves[h].twin].curve = kNone;
        halves[halves[h].twin].along = false;
    }
    curves[c].alive = false;
    curves[c].halves.clear();
}

void Surface::retag_curve(Id c, Family fam, std::string name) {
    curves[c].fam = fam;
    curves[c].name = std::move(name);
}

std::vector<Id> Surface::curves_of(Family fam) const {
    std::vector<Id> out;
    for (size_t c = 0; c < curves.size(); ++c)
        if (curves[c].alive && curves[c].fam == fam) out.push_back(static_cast<Id>(c));
    return out;
}

Id Surface::find_curve(Family fam, const std::string& name) const {
    for (size_t c = 0; c < curves.size(); ++c)
        if (curves[c].alive && curves[c].fam == fam && curves[c].name == name) return static_cast<Id>(c);
    return kNone;
}

bool Surface::curve_simple(Id c) const {
    const CurveRec& cr = curves[c];
    std::set<Id> vs;
    for (Id h : cr.halves)
        if (!vs.insert(halves[h].org).second) return false;
    if (!cr.closed) {
        Id last = cr.halves.back();
        if (vs.count(head(last))) return false;
    }
    return true;
}

bool Surface::curve_interior(Id c) const {
    std::set<Id> cv;
    for (Id h : curves[c].halves) {
        cv.insert(org(h));
        cv.insert(head(h));
    }
    for (size_t h = 0; h < halves.size(); ++h)
        if (halves[h].alive && halves[h].face == kNone && cv.count(halves[h].org)) return false;
    return true;
}

int Surface::raw_crossings(Id c1, Id c2) const {
    if (c1 == c2) return 0;
    std::set<Id> v1;
    for (Id h : curves[c1].halves) v1.insert(org(h));
    if (!curves[c1].closed) v1.insert(head(curves[c1].halves.back()));
    int n = 0;
    std::set<Id> counted;
    for (Id h : curves[c2].halves) {
        for (Id v : {org(h), head(h)})
            if (v1.count(v) && counted.insert(v).second) ++n;
    }
    return n;
}

int Surface::signed_crossings(Id c1, Id c2) const {
    if (c1 == c2) return 0;
    std::map<Id, Id> at1;
    for (Id h : curves[c1].halves) at1[org(h)] = h;
    std::map<Id, Id> in2;  // vertex -> twin of the c2 half entering it
    for (Id h : curves[c2].halves) in2[head(h)] = twin(h);
    int sum = 0;
    std::set<Id> counted;
    for (Id h : curves[c2].halves) {
        Id v = org(h);
        auto it = at1.find(v);
        if (it == at1.end() || !counted.insert(v).second) continue;
        Id start = it->second;
        Id c2out = h;
        Id c2in_t = in2.at(v);
        int pos_out = -1, pos_in = -1, idx = 0;
        Id cur = rot_ccw(start);
        while (cur != start) {
            if (cur == c2out) pos_out = idx;
            if (cur == c2in_t) pos_in = idx;
            cur = rot_ccw(cur);
            ++idx;
            if (idx > static_cast<int>(halves.size())) fail("signed_crossings: rotation not closing");
        }
        if (pos_out < 0 || pos_in < 0) fail("signed_crossings: not a crossing vertex");
        sum += (pos_out < pos_in) ? +1 : -1;
    }
    return sum;
}

CutResult Surface::cut_along(Id cid) {
    const CurveRec& c = curves[cid];
    if (!c.closed) fail("cut_along: open curve");
    int m = static_cast<int>(c.halves.size());
    if (m < 2) fail("cut_along: too short");
    std::vector<Id> H = c.halves;
    std::vector<Id> T(m);
    for (int i = 0; i < m; ++i) T[i] = twin(H[i]);

    CutResult res;
    res.left_vertices.resize(m);
    res.right_vertices.resize(m);

    struct VertInfo {
        std::vector<Id> left_fan, right_fan;
    };
    std::vector<VertInfo> info(m);
    for (int i = 0; i < m; ++i) {
        Id back = T[(i + m - 1) % m];
        Id cur = rot_ccw(H[i]);
        bool left = true;
        while (cur != H[i]) {
            if (cur == back) {
                left = false;
            } else {
                (left ? info[i].left_fan : info[i].right_fan).push_back(cur);
            }
            cur = rot_ccw(cur);
        }
        res.left_vertices[i] = org(H[i]);
    }

    std::vector<Id> bL(m), bR(m);
    for (int i = 0; i < m; ++i) {
        res.right_vertices[i] = new_vertex();
        bL[i] = new_half();
        bR[i] = new_half();
    }
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        halves[H[i]].twin = bL[i];
        halves[bL[i]].twin = H[i];
        halves[bL[i]].org = res.left_vertices[j];
        halves[bL[i]].face = kNone;
        halves[bL[i]].curve = cid;
        halves[bL[i]].along = false;

        halves[T[i]].twin = bR[i];
        halves[bR[i]].twin = T[i];
        halves[T[i]].org = res.right_vertices[j];
        halves[bR[i]].org = res.right_vertices[i];
        halves[bR[i]].face = kNone;
        halves[bR[i]].curve = kNone;
        halves[bR[i]].along = false;
        halves[T[i]].curve = kNone;
        halves[T[i]].along = false;
    }
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m, k = (i + m - 1) % m;
        halves[bL[i]].next = bL[k];
        halves[bL[i]].prev = bL[j];
        halves[bL[i]].face = kNone;
        halves[bR[i]].next = bR[j];
        halves[bR[i]].prev = bR[k];
        for (Id g : info[i].right_fan) halves[g].org = res.right_vertices[i];
        verts[res.right_vertices[i]].out = bR[i];
        verts[res.left_vertices[i]].out = H[i];
    }
    if (!frame.empty()) {
        frame.resize(halves.size());
        for (int i = 0; i < m; ++i) {
            frame[bL[i]] = frame[H[i]];
            for (auto& x : frame[bL[i]]) x = -x;
            frame[bR[i]] = frame[T[i]];
            for (auto& x : frame[bR[i]]) x = -x;
        }
    }

    for (int i = 0; i < m; ++i) {
        Id other_out_left = kNone, other_out_right = kNone;
        for (Id g : info[i].left_fan)
            if (halves[g].curve != kNone) other_out_left = g;
        for (Id g : info[i].right_fan)
            if (halves[g].curve != kNone) other_out_right = g;
        if (other_out_left == kNone && other_out_right == kNone) continue;
        if (other_out_left == kNone || other_out_right == kNone) fail("cut_along: non-transversal crossing");
        CutResult::Strand s;
        if (halves[other_out_left].along) {
            s.out_half = other_out_left;
            s.in_half = twin(other_out_right);
            s.enters_left = false;
        } else {
            s.out_half = other_out_right;
            s.in_half = twin(other_out_left);
            s.enters_left = true;
        }
        s.curve = halves[s.out_half].curve;
        s.left_vertex = res.left_vertices[i];
        s.right_vertex = res.right_vertices[i];
        res.strands.push_back(s);
    }

    res.left_boundary_half = bL[0];
    res.right_boundary_half = bR[0];
    return res;
}

void Surface::surger_curve(Id cid) {
    std::set<Id> severed;
    {
        std::set<Id> cv;
        for (Id h : curves[cid].halves) cv.insert(org(h));
        for (size_t c2 = 0; c2 < curves.size(); ++c2) {
            if (!curves[c2].alive || static_cast<Id>(c2) == cid) continue;
            for (Id h : curves[c2].halves)
                if (cv.count(org(h)) || cv.count(head(h))) {
                    severed.insert(static_cast<Id>(c2));
                    break;
                }
        }
    }
    CutResult cut = cut_along(cid);
    drop_curve(cid);
    for (Id c2 : severed) drop_curve(c2);
    cap_boundary(cut.left_boundary_half);
    cap_boundary(cut.right_boundary_half);
    invalidate_frame();
}

Surface Surface::compact(std::vector<Id>* half_map, std::vector<Id>* curve_map) const {
    Surface out;
    std::vector<Id> hm(halves.size(), kNone), vm(verts.size(), kNone), fm(faces.size(), kNone),
        cm(curves.size(), kNone);
    for (size_t v = 0; v < verts.size(); ++v)
        if (verts[v].alive) {
            vm[v] = static_cast<Id>(out.verts.size());
            out.verts.push_back({kNone, true});
        }
    for (size_t f = 0; f < faces.size(); ++f)
        if (faces[f].alive) {
            fm[f] = static_cast<Id>(out.faces.size());
            FaceRec fr;
            fr.alive = true;
            out.faces.push_back(fr);
        }
    for (size_t h = 0; h < halves.size(); ++h)
        if (halves[h].alive) {
            hm[h] = static_cast<Id>(out.halves.size());
            out.halves.push_back({});
        }
    for (size_t c = 0; c < curves.size(); ++c)
        if (curves[c].alive) {
            cm[c] = static_cast<Id>(out.curves.size());
            out.curves.push_back({});
        }
    for (size_t h = 0; h < halves.size(); ++h) {
        if (!halves[h].alive) continue;
        Half& o = out.halves[hm[h]];
        const Half& i = halves[h];
        o.alive = true;
        o.twin = hm[i.twin];
        o.next = hm[i.next];
        o.prev = hm[i.prev];
        o.face = i.face == kNone ? kNone : fm[i.face];
        o.org = vm[i.org];
        o.curve = (i.curve == kNone || cm[i.curve] == kNone) ? kNone : cm[i.curve];
        o.along = o.curve == kNone ? false : i.along;
        out.verts[o.org].out = hm[h];
        if (o.face != kNone) out.faces[o.face].half = hm[h];
    }
    {
        // orig roots may be dead records; give each root class one representative
        std::map<Id, Id> root_rep;
        for (size_t f = 0; f < faces.size(); ++f) {
            if (!faces[f].alive) continue;
            Id of = faces[f].orig == kNone ? static_cast<Id>(f) : faces[f].orig;
            Id rep;
            if (of < static_cast<Id>(fm.size()) && fm[of] != kNone) {
                rep = fm[of];
            } else {
                auto it = root_rep.find(of);
                if (it == root_rep.end()) it = root_rep.emplace(of, fm[f]).first;
                rep = it->second;
            }
            out.faces[fm[f]].orig = rep;
        }
    }
    for (size_t c = 0; c < curves.size(); ++c) {
        if (!curves[c].alive) continue;
        CurveRec& o = out.curves[cm[c]];
        o = curves[c];
        for (auto& h : o.halves) h = hm[h];
    }
    for (const auto& t : tubes) {
        TubeRecord o = t;
        auto remap_curve = [&](Id c) {
            return (c != kNone && curves[c].alive) ? cm[c] : kNone;
        };
        o.waist = remap_curve(t.waist);
        for (int i = 0; i < 2; ++i) o.ends[i] = remap_curve(t.ends[i]);
        out.tubes.push_back(o);
    }
    out.notes = notes;
    if (!frame.empty()) {
        out.frame.resize(out.halves.size());
        out.frame_rank = frame_rank;
        for (size_t h = 0; h < halves.size(); ++h)
            if (halves[h].alive) out.frame[hm[h]] = frame[h];
    }
    if (half_map) *half_map = hm;
    if (curve_map) *curve_map = cm;
    return out;
}

void Surface::validate() const {
    for (size_t h = 0; h < halves.size(); ++h) {
        const Half& H = halves[h];
        if (!H.alive) continue;
        std::ostringstream ctx;
        ctx << " (half " << h << ")";
        if (H.twin == kNone || !halves[H.twin].alive || halves[H.twin].twin != static_cast<Id>(h))
            fail("twin involution broken" + ctx.str());
        if (H.next == kNone || !halves[H.next].alive || halves[H.next].prev != static_cast<Id>(h))
            fail("next/prev broken" + ctx.str());
        if (halves[H.next].org != head(static_cast<Id>(h))) fail("next origin mismatch" + ctx.str());
        if (halves[H.next].face != H.face) fail("face mismatch along cycle" + ctx.str());
        if (H.org == kNone || !verts[H.org].alive) fail("dead origin" + ctx.str());
        if (H.face != kNone && !faces[H.face].alive) fail("dead face" + ctx.str());
        if (H.curve != kNone) {
            if (!curves[H.curve].alive) fail("dead curve ref" + ctx.str());
            if (halves[H.twin].curve != H.curve) fail("curve twin mismatch" + ctx.str());
        }
    }
    for (size_t f = 0; f < faces.size(); ++f) {
        if (!faces[f].alive) continue;
        Id h0 = faces[f].half;
        if (h0 == kNone || !halves[h0].alive || halves[h0].face != static_cast<Id>(f)) fail("face rep broken");
        int steps = 0;
        Id cur = h0;
        do {
            cur = halves[cur].next;
            if (++steps > static_cast<int>(halves.size())) fail("face cycle not closing");
        } while (cur != h0);
    }
    // vertex -> curve halves incident, for crossing checks
    std::map<Id, std::vector<Id>> curve_out;
    for (size_t h = 0; h < halves.size(); ++h)
        if (halves[h].alive && halves[h].curve != kNone) curve_out[halves[h].org].push_back(static_cast<Id>(h));

    for (size_t c = 0; c < curves.size(); ++c) {
        const CurveRec& cr = curves[c];
        if (!cr.alive) continue;
        if (cr.halves.empty()) fail("empty curve " + cr.name);
        for (size_t i = 0; i < cr.halves.size(); ++i) {
            Id h = cr.halves[i];
            if (!halves[h].alive) fail("curve uses dead half: " + cr.name);
            if (halves[h].curve != static_cast<Id>(c)) fail("curve tag mismatch: " + cr.name);
            if (!halves[h].along) fail("curve lists anti half: " + cr.name);
            bool last = i + 1 == cr.halves.size();
            if (!last || cr.closed) {
                Id nxt = cr.halves[last ? 0 : i + 1];
                if (head(h) != org(nxt)) fail("curve not continuous: " + cr.name);
            }
        }
    }
    for (auto& [v, hs] : curve_out) {
        std::set<Id> cs;
        for (Id g : hs)
            if (halves[g].face != kNone || halves[twin(g)].face != kNone) cs.insert(halves[g].curve);
        if (cs.size() > 2) fail("vertex with >2 curves");
        if (cs.size() == 2) {
            if (hs.size() != 4) fail("crossing vertex not 4-strand");
            Id start = hs[0];
            std::vector<Id> order;
            Id cur = start;
            int guard = 0;
            do {
                if (halves[cur].curve != kNone) order.push_back(halves[cur].curve);
                cur = rot_ccw(cur);
                if (++guard > static_cast<int>(halves.size())) fail("rotation not closing");
            } while (cur != start);
            if (order.size() != 4 || order[0] != order[2] || order[1] != order[3] || order[0] == order[1])
                fail("crossing not transversal");
        }
    }
}

Surface disjoint_union(const Surface& a, const Surface& b) {
    Surface out = a.compact();
    Surface bc = b.compact();
    Id ho = static_cast<Id>(out.halves.size());
    Id vo = static_cast<Id>(out.verts.size());
    Id fo = static_cast<Id>(out.faces.size());
    Id co = static_cast<Id>(out.curves.size());
    for (const auto& h : bc.halves) {
        Half n = h;
        n.twin += ho;
        n.next += ho;
        n.prev += ho;
        if (n.face != kNone) n.face += fo;
        n.org += vo;
        if (n.curve != kNone) n.curve += co;
        out.halves.push_back(n);
    }
    for (const auto& v : bc.verts) {
        VertexRec n = v;
        n.out += ho;
        out.verts.push_back(n);
    }
    for (const auto& f : bc.faces) {
        FaceRec n = f;
        n.half += ho;
        out.faces.push_back(n);
    }
    for (const auto& c : bc.curves) {
        CurveRec n = c;
        for (auto& h : n.halves) h += ho;
        out.curves.push_back(n);
    }
    for (const auto& t : bc.tubes) {
        TubeRecord n = t;
        if (n.waist != kNone) n.waist += co;
        for (auto& e : n.ends)
            if (e != kNone) e += co;
        out.tubes.push_back(n);
    }
    out.invalidate_frame();
    return out;
}

}  // namespace rtk
