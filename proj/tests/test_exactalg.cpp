#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g1surf/bbform.hpp"
#include "g1surf/bipoly.hpp"
#include "g1surf/rat.hpp"
#include "g1surf/unipoly.hpp"
#include "support/testutil.hpp"

using namespace g1;
using testutil::error_code_of;

TEST_CASE("rational literal parsing") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-0") == Rat(0));
    CHECK(rat_str(Rat(-3, 2)) == "-3/2");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(parse_rat(rat_str(Rat(22, 7))) == Rat(22, 7));

    for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "2/", "/3", "+4", "1 /2"})
        CHECK(error_code_of([&] { parse_rat(bad); }) == "ParseError");
}

TEST_CASE("univariate arithmetic and calculus") {
    UniPoly p{Rat(1), Rat(2), Rat(1)}; // (1+u)^2
    UniPoly q{Rat(1), Rat(1)};
    CHECK(q * q == p);
    CHECK(p - q * q == UniPoly());
    CHECK(p(Rat(1, 2)) == Rat(9, 4));
    CHECK(p.derivative() == UniPoly{Rat(2), Rat(2)});
    CHECK(p.derivative().antiderivative() == p - UniPoly(Rat(1)));
    CHECK(UniPoly{Rat(0), Rat(0), Rat(3)}.integral01() == Rat(1));
    CHECK(p.degree() == 2);
    CHECK(UniPoly().degree() == -1);

    // compose / reflect
    UniPoly u = UniPoly::x();
    CHECK(p.compose(u * Rat(2)) == UniPoly{Rat(1), Rat(4), Rat(4)});
    CHECK(q.reflected() == UniPoly{Rat(2), Rat(-1)});
    CHECK(p.reflected().reflected() == p);

    // gcd and primitive scaling
    UniPoly a{Rat(-1), Rat(0), Rat(1)};        // u^2 - 1
    UniPoly b{Rat(1), Rat(2), Rat(1)};         // (u+1)^2
    CHECK(gcd(a, b) == UniPoly{Rat(1), Rat(1)});
    CHECK(gcd(UniPoly(), b) == b);
    CHECK((UniPoly{Rat(1, 2), Rat(1, 3)}).primitive() == UniPoly{Rat(3), Rat(2)});
    CHECK((UniPoly{Rat(0), Rat(-2), Rat(-4)}).primitive() == UniPoly{Rat(0), Rat(1), Rat(2)});
}

TEST_CASE("root counting and sign predicates on [0,1]") {
    // roots 1/4 and 3/4
    UniPoly two{Rat(3, 16), Rat(-1), Rat(1)};
    CHECK(count_roots_01(two) == 2);
    // double root at 1/2 plus simple root at 1/4: distinct count is 2
    UniPoly h{Rat(-1, 2), Rat(1)};
    UniPoly q{Rat(-1, 4), Rat(1)};
    CHECK(count_roots_01(h * h * q) == 2);
    // roots only at endpoints
    CHECK(count_roots_01(UniPoly{Rat(0), Rat(-1), Rat(1)}) == 0);

    CHECK(nonvanishing_on_01(UniPoly{Rat(1), Rat(0), Rat(1)}));
    CHECK(!nonvanishing_on_01(UniPoly{Rat(-1, 2), Rat(1)}));
    CHECK(!nonvanishing_on_01(UniPoly::x()));
    CHECK(!nonvanishing_on_01(UniPoly()));
    CHECK(nonvanishing_on_01(UniPoly{Rat(1), Rat(1), Rat(-1)})); // 1 + u - u^2

    CHECK(negative_on_01(UniPoly{Rat(-1)}, UniPoly{Rat(1)}));
    CHECK(negative_on_01(UniPoly{Rat(-2), Rat(1)}, UniPoly{Rat(1)}));  // u - 2 over 1
    CHECK(negative_on_01(UniPoly{Rat(1)}, UniPoly{Rat(-3), Rat(1)}));  // 1 over u - 3
    CHECK(!negative_on_01(UniPoly{Rat(-1), Rat(2)}, UniPoly{Rat(1)})); // 2u - 1 vanishes
    CHECK(!negative_on_01(UniPoly{Rat(1)}, UniPoly{Rat(1)}));
}

TEST_CASE("Bernstein conversions") {
    CHECK(bernstein_coeffs(UniPoly::x(), 3) ==
          std::vector<Rat>{Rat(0), Rat(1, 3), Rat(2, 3), Rat(1)});
    CHECK(bernstein_coeffs(UniPoly(Rat(1)), 4) == std::vector<Rat>(5, Rat(1)));
    UniPoly p{Rat(1), Rat(-3), Rat(0), Rat(5)};
    CHECK(from_bernstein(bernstein_coeffs(p, 3)) == p);
    CHECK(from_bernstein(bernstein_coeffs(p, 6)) == p);
    CHECK(error_code_of([&] { bernstein_coeffs(p, 2); }) == "DegreeOverflow");
}

TEST_CASE("bivariate polynomials") {
    BiPoly g = BiPoly::u() * BiPoly::u() * BiPoly::v() - BiPoly::v() * Rat(3) + BiPoly(Rat(2));
    CHECK(g(Rat(2), Rat(1, 2)) == Rat(2) - Rat(3, 2) + Rat(2));
    CHECK(g.deg_u() == 2);
    CHECK(g.deg_v() == 1);
    CHECK(g.total_degree() == 3);
    CHECK(g.d_u() == BiPoly::u() * BiPoly::v() * Rat(2));
    CHECK(g.d_v() == BiPoly::u() * BiPoly::u() - BiPoly(Rat(3)));
    CHECK(g.at_v0() == UniPoly{Rat(2)});
    CHECK(g.dv_at_v0() == UniPoly{Rat(-3), Rat(0), Rat(1)});

    // substitution: g(1-u-v, u) evaluated two ways
    BiPoly su = BiPoly(Rat(1)) - BiPoly::u() - BiPoly::v();
    BiPoly sv = BiPoly::u();
    BiPoly h = g.subst(su, sv);
    for (long uu = 0; uu <= 2; ++uu)
        for (long vv = 0; vv <= 2; ++vv) {
            Rat u = rat(uu, 3), v = rat(vv, 3);
            CHECK(h(u, v) == g(Rat(1) - u - v, u));
        }
}

namespace {

BiPoly sample_poly() {
    // 1 + 2u - v + 3u v - u^2 + (1/2) u^2 v
    return BiPoly(Rat(1)) + BiPoly::u() * Rat(2) - BiPoly::v() + BiPoly::u() * BiPoly::v() * Rat(3) -
           BiPoly::u() * BiPoly::u() + BiPoly::u() * BiPoly::u() * BiPoly::v() * Rat(1, 2);
}

} // namespace

TEST_CASE("BB form round trips and degree raise") {
    BiPoly g = sample_poly();
    for (FaceKind kind : {FaceKind::Triangle, FaceKind::Rectangle}) {
        for (int k = 3; k <= 5; ++k) {
            BBForm b = to_bb(g, kind, k);
            CHECK(from_bb(b) == g);
            BBForm e = elevate(b);
            CHECK(e.k == k + 1);
            CHECK(from_bb(e) == g);
        }
    }
    // linear precision on the triangle: coefficient of u at (i,j) is i/k
    BBForm lu = to_bb(BiPoly::u(), FaceKind::Triangle, 4);
    CHECK(lu.at(2, 1) == Rat(1, 2));
    CHECK(lu.at(0, 3) == Rat(0));
    // rectangle tensor: coefficient of uv at (i,j) is (i/k)(j/k)
    BBForm luv = to_bb(BiPoly::u() * BiPoly::v(), FaceKind::Rectangle, 3);
    CHECK(luv.at(2, 1) == Rat(2, 9));

    CHECK(error_code_of([&] { to_bb(g, FaceKind::Triangle, 2); }) == "DegreeOverflow");
    BiPoly uv3 = BiPoly::u() * BiPoly::v() * BiPoly::v() * BiPoly::v();
    CHECK(error_code_of([&] { to_bb(uv3, FaceKind::Rectangle, 2); }) == "DegreeOverflow");
    CHECK(to_bb(uv3, FaceKind::Rectangle, 3).kind == FaceKind::Rectangle);
}

TEST_CASE("edge restrictions and transversal derivatives") {
    BiPoly g = sample_poly();
    const int k = 4;

    BBForm tb = to_bb(g, FaceKind::Triangle, k);
    // The transversal is the v-derivative of the chart attached to the edge in
    // the chosen orientation. For a triangle the chart's u-lines are the other
    // two sides' directions, so the transversal of edge 1 (from vertex 1) is
    // -d/du and of edge 2 (from vertex 2) is d/du - d/dv; reversing an edge
    // shears the chart, it does not just negate the parameter.
    for (long tt = 0; tt <= 4; ++tt) {
        Rat t = rat(tt, 4);
        CHECK(edge_restriction(tb, 0, true)(t) == g(t, Rat(0)));
        CHECK(edge_transversal(tb, 0, true)(t) == g.d_v()(t, Rat(0)));
        // edge 1 from (1,0) to (0,1): points (1-t, t)
        CHECK(edge_restriction(tb, 1, true)(t) == g(Rat(1) - t, t));
        CHECK(edge_transversal(tb, 1, true)(t) == -g.d_u()(Rat(1) - t, t));
        // edge 2 from (0,1) to (0,0): points (0, 1-t)
        CHECK(edge_restriction(tb, 2, true)(t) == g(Rat(0), Rat(1) - t));
        CHECK(edge_transversal(tb, 2, true)(t) ==
              (g.d_u() - g.d_v())(Rat(0), Rat(1) - t));
        // edge 1 reversed: chart from vertex 2, transversal -d/dv
        CHECK(edge_restriction(tb, 1, false)(t) == g(t, Rat(1) - t));
        CHECK(edge_transversal(tb, 1, false)(t) == -g.d_v()(t, Rat(1) - t));
    }

    BBForm rb = to_bb(g, FaceKind::Rectangle, k);
    for (long tt = 0; tt <= 4; ++tt) {
        Rat t = rat(tt, 4);
        CHECK(edge_restriction(rb, 0, true)(t) == g(t, Rat(0)));
        CHECK(edge_transversal(rb, 0, true)(t) == g.d_v()(t, Rat(0)));
        CHECK(edge_restriction(rb, 1, true)(t) == g(Rat(1), t));
        CHECK(edge_transversal(rb, 1, true)(t) == -g.d_u()(Rat(1), t));
        CHECK(edge_restriction(rb, 2, true)(t) == g(Rat(1) - t, Rat(1)));
        CHECK(edge_transversal(rb, 2, true)(t) == -g.d_v()(Rat(1) - t, Rat(1)));
        CHECK(edge_restriction(rb, 3, true)(t) == g(Rat(0), Rat(1) - t));
        CHECK(edge_transversal(rb, 3, true)(t) == g.d_u()(Rat(0), Rat(1) - t));
        // rectangle charts have no shear: reversal only reflects the parameter
        CHECK(edge_restriction(rb, 0, false)(t) == g(Rat(1) - t, Rat(0)));
        CHECK(edge_transversal(rb, 0, false)(t) == g.d_v()(Rat(1) - t, Rat(0)));
    }
}

TEST_CASE("corner jets in corner charts") {
    BiPoly g = sample_poly();
    BiPoly gu = g.d_u(), gv = g.d_v(), guu = gu.d_u(), guv = gu.d_v(), gvv = gv.d_v();

    BBForm tb = to_bb(g, FaceKind::Triangle, 4);
    {
        Jet j = corner_jet(tb, 0); // u along edge 0, v along edge 2 reversed
        CHECK(j.c00 == g(Rat(0), Rat(0)));
        CHECK(j.c10 == gu(Rat(0), Rat(0)));
        CHECK(j.c01 == gv(Rat(0), Rat(0)));
        CHECK(j.c11 == guv(Rat(0), Rat(0)));
    }
    {
        // corner 1: u-direction (-1,1), v-direction (-1,0) at point (1,0)
        Jet j = corner_jet(tb, 1);
        CHECK(j.c00 == g(Rat(1), Rat(0)));
        CHECK(j.c10 == -gu(Rat(1), Rat(0)) + gv(Rat(1), Rat(0)));
        CHECK(j.c01 == -gu(Rat(1), Rat(0)));
        CHECK(j.c11 == guu(Rat(1), Rat(0)) - guv(Rat(1), Rat(0)));
    }
    {
        // corner 2: u-direction (0,-1), v-direction (1,-1) at point (0,1)
        Jet j = corner_jet(tb, 2);
        CHECK(j.c00 == g(Rat(0), Rat(1)));
        CHECK(j.c10 == -gv(Rat(0), Rat(1)));
        CHECK(j.c01 == gu(Rat(0), Rat(1)) - gv(Rat(0), Rat(1)));
        CHECK(j.c11 == -guv(Rat(0), Rat(1)) + gvv(Rat(0), Rat(1)));
    }

    BBForm rb = to_bb(g, FaceKind::Rectangle, 3);
    {
        Jet j = corner_jet(rb, 2); // at (1,1): u-direction (-1,0), v-direction (0,-1)
        CHECK(j.c00 == g(Rat(1), Rat(1)));
        CHECK(j.c10 == -gu(Rat(1), Rat(1)));
        CHECK(j.c01 == -gv(Rat(1), Rat(1)));
        CHECK(j.c11 == guv(Rat(1), Rat(1)));
    }
    CHECK(error_code_of([&] { corner_jet(tb, 3); }) == "InvalidCorner");
    CHECK(error_code_of([&] { corner_jet(rb, 4); }) == "InvalidCorner");
}
