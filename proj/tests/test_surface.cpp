#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtk/curves.hpp"
#include "rtk/surface.hpp"

using namespace rtk;

TEST_CASE("single polygon is a disk") {
    Surface s;
    s.add_polygon(3);
    s.validate();
    CHECK(s.euler() == 1);
    CHECK(s.n_boundary_circles() == 1);
    CHECK(s.genus() == 0);
    CHECK(s.connected());
}

TEST_CASE("two glued polygons form a disk") {
    Surface s;
    auto a = s.add_polygon(4);
    auto b = s.add_polygon(4);
    s.glue_boundary(s.halves[a[0]].twin, s.halves[b[0]].twin);
    s.validate();
    CHECK(s.euler() == 1);
    CHECK(s.n_boundary_circles() == 1);
}

TEST_CASE("page strip") {
    Page p = make_page({});
    p.s.validate();
    CHECK(p.s.euler() == 1);
    CHECK(p.s.genus() == 0);

    // one hole: annulus
    Page q = make_page({{PageFeature::hole, "h1"}});
    q.s.validate();
    CHECK(q.s.euler() == 0);
    CHECK(q.s.n_boundary_circles() == 2);
    CHECK(q.s.genus() == 0);
}

TEST_CASE("build_surface chi bookkeeping") {
    // (0,1) -> disk
    Page d = build_surface(0, 1);
    d.s.validate();
    CHECK(d.s.euler() == 1);
    CHECK(d.s.genus() == 0);
    CHECK(d.s.n_boundary_circles() == 1);

    // (3,4) -> chi = -8, the D_n surface
    Page s34 = build_surface(3, 4);
    s34.s.validate();
    CHECK(s34.s.euler() == -8);
    CHECK(s34.s.genus() == 3);
    CHECK(s34.s.n_boundary_circles() == 4);

    // (4,4) -> chi = -10, the P1/Q1 surface
    Page s44 = build_surface(4, 4);
    s44.s.validate();
    CHECK(s44.s.euler() == -10);
    CHECK(s44.s.genus() == 4);
    CHECK(s44.s.n_boundary_circles() == 4);

    CHECK_THROWS(build_surface(1, 0));
}

TEST_CASE("attach_tube raises genus and drops chi by 2") {
    Page p = build_surface(2, 4);
    int chi = p.s.euler();
    CHECK(chi == -6);
    CHECK(p.s.genus() == 2);

    // two interior gap cells
    Id fa = p.mid(2), fb = p.mid(4);
    attach_tube(p.s, fa, fb, "extra");
    p.s.validate();
    CHECK(p.s.euler() == chi - 2);
    CHECK(p.s.genus() == 3);
    CHECK(p.s.n_boundary_circles() == 4);

    CHECK_THROWS(attach_tube(p.s, fa, fa, "self"));
}

TEST_CASE("tube joining two components merges them") {
    Page a = build_surface(1, 1);
    Page b = build_surface(1, 1);
    Surface u = disjoint_union(a.s, b.s);
    u.validate();
    CHECK(u.n_components() == 2);
    int chi = u.euler();

    // pick an interior curve-free face in each component
    auto interior_ok = [&](Id f) {
        Id h0 = u.faces[f].half;
        Id cur = h0;
        do {
            if (u.halves[u.halves[cur].twin].face == kNone) return false;
            if (u.halves[cur].curve != kNone || u.halves[u.halves[cur].twin].curve != kNone) return false;
            cur = u.halves[cur].next;
        } while (cur != h0);
        return true;
    };
    // flood-fill component of face 0
    std::vector<int> comp(u.faces.size(), -1);
    std::vector<Id> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        Id f = stack.back();
        stack.pop_back();
        Id h0 = u.faces[f].half;
        Id cur = h0;
        do {
            Id g = u.halves[u.halves[cur].twin].face;
            if (g != kNone && comp[g] < 0) {
                comp[g] = 0;
                stack.push_back(g);
            }
            cur = u.halves[cur].next;
        } while (cur != h0);
    }
    Id fa = kNone, fb = kNone;
    for (size_t f = 0; f < u.faces.size(); ++f) {
        if (!u.faces[f].alive || !interior_ok(static_cast<Id>(f))) continue;
        if (comp[f] == 0 && fa == kNone) fa = static_cast<Id>(f);
        if (comp[f] < 0 && fb == kNone) fb = static_cast<Id>(f);
    }
    REQUIRE(fa != kNone);
    REQUIRE(fb != kNone);
    attach_tube(u, fa, fb, "bridge");
    u.validate();
    CHECK(u.n_components() == 1);
    CHECK(u.euler() == chi - 2);
}

TEST_CASE("routing a loop around a hole") {
    Page p = make_page({{PageFeature::hole, "h1"}});
    int chi = p.s.euler();
    int col = p.feature_col[0];
    Id c = route_closed_curve(
        p.s, Family::aux, "loop",
        {p.top(col), p.top(col + 1), p.cell[col + 1][1], p.bot(col + 1), p.bot(col), p.bot(col - 1),
         p.cell[col - 1][1], p.top(col - 1)});
    p.s.validate();
    CHECK(p.s.euler() == chi);  // refinement preserves chi
    CHECK(p.s.curves[c].closed);
    CHECK(p.s.curve_simple(c));
    CHECK(p.s.curve_interior(c));
    CHECK(p.s.curves[c].halves.size() >= 4);
}

TEST_CASE("marker circles on a tube and parallel copy") {
    Page p = build_surface(1, 1);
    p.s.validate();
    REQUIRE(p.s.tubes.size() == 1);
    Id waist = p.s.tubes[0].waist;
    REQUIRE(waist != kNone);
    CHECK(p.s.curves[waist].closed);
    CHECK(p.s.curve_simple(waist));

    int chi = p.s.euler();
    Id cp = parallel_copy(p.s, waist, true, Family::alpha, "a0");
    p.s.validate();
    CHECK(p.s.euler() == chi);
    CHECK(p.s.curve_simple(cp));
    CHECK(p.s.raw_crossings(cp, waist) == 0);

    // copy on the other side too
    Id cp2 = parallel_copy(p.s, waist, false, Family::alpha, "a0r");
    p.s.validate();
    CHECK(p.s.raw_crossings(cp2, waist) == 0);
    CHECK(p.s.raw_crossings(cp2, cp) == 0);
}

TEST_CASE("through-tube curve crosses the three marker circles once each") {
    Page p = build_surface(1, 2);
    const TubeCells& tc = p.tube_cells[0];
    // route: top cell over end a -> ring a (N side) -> ring b (N) -> top cell over end b,
    // then back along the top corridor
    int ca = p.feature_col[0], cb = p.feature_col[1];
    std::vector<Id> cells = {p.top(ca)};
    for (Id f : tube_transit(p.s, tc, p.top(ca), p.top(cb))) cells.push_back(f);
    cells.push_back(p.top(cb));
    // return along the top corridor between the two columns
    for (int c = cb - 1; c > ca; --c) cells.push_back(p.top(c));
    Id dual = route_closed_curve(p.s, Family::beta, "b0", cells);
    p.s.validate();
    CHECK(p.s.curve_simple(dual));
    CHECK(p.s.raw_crossings(dual, p.s.tubes[0].waist) == 1);
    CHECK(p.s.raw_crossings(dual, p.s.tubes[0].ends[0]) == 1);
    CHECK(p.s.raw_crossings(dual, p.s.tubes[0].ends[1]) == 1);
}

TEST_CASE("surger along the waist of a torus-with-hole gives a disk... annulus") {
    // surface (1,1); cutting the waist and capping gives genus 0 with 1 hole
    Page p = build_surface(1, 1);
    Id waist = p.s.tubes[0].waist;
    Surface s = p.s;  // copy
    s.surger_curve(waist);
    s.validate();
    auto comp = s.component_summary();
    REQUIRE(comp.size() == 1);
    CHECK(comp[0].first == 0);   // genus 0
    CHECK(comp[0].second == 1);  // 1 boundary circle
    CHECK(s.euler() == p.s.euler() + 2);
}

TEST_CASE("compact preserves structure") {
    Page p = build_surface(2, 3);
    route_closed_curve(p.s, Family::aux, "x",
                       {p.top(2), p.cell[2][1], p.bot(2), p.bot(3), p.bot(4), p.cell[4][1], p.top(4), p.top(3)});
    Surface c = p.s.compact();
    c.validate();
    CHECK(c.euler() == p.s.euler());
    CHECK(c.genus() == p.s.genus());
    CHECK(c.n_boundary_circles() == p.s.n_boundary_circles());
    CHECK(c.curves.size() <= p.s.curves.size());
}
