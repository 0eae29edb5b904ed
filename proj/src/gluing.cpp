#include "g1surf/gluing.hpp"

#include "g1surf/errors.hpp"

#include <algorithm>
#include <set>

namespace g1 {

Rat EdgeGluing::beta_prime0() const {
    Rat a0 = a(Rat(0));
    return (b.derivative()(Rat(0)) * a0 - b(Rat(0)) * a.derivative()(Rat(0))) / (a0 * a0);
}

Rat EdgeGluing::gamma_prime0() const {
    Rat a0 = a(Rat(0));
    return (c.derivative()(Rat(0)) * a0 - c(Rat(0)) * a.derivative()(Rat(0))) / (a0 * a0);
}

EdgeGluing normalized(EdgeGluing g) {
    Int den_lcm(1), num_gcd(0);
    for (const UniPoly* p : {&g.a, &g.b, &g.c})
        for (const Rat& q : p->coeffs()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        }
    if (num_gcd == 0) return g; // all zero, nothing to scale
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    int sign = sgn(g.a(Rat(0)));
    if (sign == 0)
        for (const UniPoly* p : {&g.a, &g.b, &g.c}) {
            for (const Rat& q : p->coeffs())
                if (q != 0) {
                    sign = sgn(q);
                    break;
                }
            if (sign != 0) break;
        }
    if (sign < 0) scale = -scale;
    g.a = g.a * scale;
    g.b = g.b * scale;
    g.c = g.c * scale;
    return g;
}

std::optional<std::string> gluing_data_defect(const EdgeGluing& g) {
    if (g.a.is_zero()) return "VanishingEdgeWeight";
    UniPoly h = gcd(gcd(g.a, g.b), g.c);
    if (h.degree() > 0) return "NotCoprime";
    if (!nonvanishing_on_01(g.a)) return "VanishingEdgeWeight";
    if (!negative_on_01(g.c, g.a)) return "GammaNotNegative";
    return std::nullopt;
}

EdgeGluing side_swapped(const EdgeGluing& g) {
    return normalized(EdgeGluing{g.c, -g.b, g.a, g.kind2, g.kind1});
}

EdgeGluing end_swapped(const EdgeGluing& g) {
    UniPoly ar = g.a.reflected(), br = g.b.reflected(), cr = g.c.reflected();
    UniPoly bt = ar * Rat(g.shear1()) - cr * Rat(g.shear2()) - br;
    return normalized(EdgeGluing{ar, bt, cr, g.kind1, g.kind2});
}

EdgeFrame canonical_frame(const Surface& s, int gi) {
    const GluingTopo& g = s.gluings[gi];
    bool aFirst = std::pair{g.faceA, g.edgeA} < std::pair{g.faceB, g.edgeB};
    int f = aFirst ? g.faceA : g.faceB;
    int e = aFirst ? g.edgeA : g.edgeB;
    int n = nverts(s.polygons[f].kind);
    return EdgeFrame{f, e, e == n - 1 ? 1 : 0};
}

namespace {

// Which end of side A corresponds to frame's origin.
int origin_on_side_a(const Surface& s, int gi, const EdgeFrame& f) {
    const GluingTopo& g = s.gluings[gi];
    if (f.face == g.faceA && f.edge == g.edgeA) return f.originEnd;
    if (f.face == g.faceB && f.edge == g.edgeB)
        return g.reversed ? 1 - f.originEnd : f.originEnd;
    fail("MissingGluing", "frame does not name a side of gluing " + std::to_string(gi));
}

bool names_side_a(const Surface& s, int gi, const EdgeFrame& f) {
    const GluingTopo& g = s.gluings[gi];
    if (f.face == g.faceA && f.edge == g.edgeA) return true;
    if (f.face == g.faceB && f.edge == g.edgeB) return false;
    fail("MissingGluing", "frame does not name a side of gluing " + std::to_string(gi));
}

} // namespace

EdgeGluing reframe(const Surface& s, int gi, EdgeGluing g, const EdgeFrame& from,
                   const EdgeFrame& to) {
    if (g.kind1 != s.polygons[from.face].kind)
        fail("InternalError", "edge data kinds disagree with the claimed frame");
    if (names_side_a(s, gi, from) != names_side_a(s, gi, to)) g = side_swapped(g);
    if (origin_on_side_a(s, gi, from) != origin_on_side_a(s, gi, to)) g = end_swapped(g);
    return g;
}

SurfaceData make_data(const Surface& s, std::vector<EdgeGluing> edges) {
    if (edges.size() != s.gluings.size())
        fail("MissingGluing", "expected " + std::to_string(s.gluings.size()) +
                                  " edge data entries, got " + std::to_string(edges.size()));
    for (int gi = 0; gi < static_cast<int>(edges.size()); ++gi) {
        EdgeFrame cf = canonical_frame(s, gi);
        const GluingTopo& g = s.gluings[gi];
        bool canonIsA = (cf.face == g.faceA && cf.edge == g.edgeA);
        edges[gi].kind1 = s.polygons[cf.face].kind;
        edges[gi].kind2 = s.polygons[canonIsA ? g.faceB : g.faceA].kind;
        edges[gi] = normalized(std::move(edges[gi]));
    }
    return SurfaceData{std::move(edges)};
}

EdgeGluing edge_in_frame(const Surface& s, const SurfaceData& d, int gi, const EdgeFrame& f) {
    return reframe(s, gi, d.edges[gi], canonical_frame(s, gi), f);
}

VertexStar vertex_star(const Surface& s, const SurfaceData& d, int orbit) {
    VertexStar star;
    star.orbit = orbit;
    star.interior = !s.orbitOnBoundary[orbit];
    const auto& slots = s.orbitSlots[orbit];
    const int size = static_cast<int>(slots.size());

    auto arriving = [&](const Slot& sl) {
        int n = s.nverts_of(sl.face);
        return (sl.vert - 1 + n) % n;
    };
    auto leaving = [&](const Slot& sl) { return sl.vert; };

    Slot cur = slots.front();
    int inEdge = arriving(cur);
    if (!star.interior) {
        // Start where the walk's entry edge is the boundary.
        bool found = false;
        for (const Slot& sl : slots)
            if (s.gluingAt[sl.face][arriving(sl)] < 0) {
                cur = sl;
                inEdge = arriving(sl);
                found = true;
                break;
            }
        if (!found) fail("ValidationFailed", "boundary vertex star has no boundary entry");
    }

    for (int step = 0; step < size; ++step) {
        star.corners.push_back(cur);
        int exit = (inEdge == leaving(cur)) ? arriving(cur) : leaving(cur);
        int gi = s.gluingAt[cur.face][exit];
        if (gi < 0) {
            if (star.interior)
                fail("ValidationFailed", "interior vertex star hit a boundary edge");
            break; // reached the far boundary edge
        }
        if (!star.interior && step == size - 1)
            fail("ValidationFailed", "boundary vertex star does not end on the boundary");

        // u = 0 at the vertex: origin is this edge's start if it leaves the
        // corner, its end if it arrives there.
        EdgeFrame frame{cur.face, exit, exit == leaving(cur) ? 0 : 1};
        EdgeGluing data = edge_in_frame(s, d, gi, frame);
        VertexStep vs;
        vs.corner = cur;
        vs.gluing = gi;
        vs.frame = frame;
        vs.beta0 = data.beta0();
        vs.gamma0 = data.gamma0();
        vs.betaPrime0 = data.beta_prime0();
        vs.gammaPrime0 = data.gamma_prime0();
        vs.joining = (vs.beta0 == 0);
        star.steps.push_back(std::move(vs));

        Slot next = s.edge_end_slot(cur.face, exit, frame.originEnd);
        const GluingTopo& gt = s.gluings[gi];
        int nextEdge = (gt.faceA == cur.face && gt.edgeA == exit) ? gt.edgeB : gt.edgeA;
        if (s.orbitAt[next.face][next.vert] != orbit)
            fail("ValidationFailed", "edge identification leaves the vertex orbit");
        cur = next;
        inEdge = nextEdge;
        if (star.interior && step == size - 1) {
            if (!(cur == slots.front()))
                fail("ValidationFailed", "vertex star is not a single fan");
        } else if (cur == slots.front() && star.interior) {
            fail("ValidationFailed", "vertex star closes early");
        }
    }
    if (static_cast<int>(star.corners.size()) != size)
        fail("ValidationFailed", "vertex star is not a single fan");
    std::set<Slot> seen(star.corners.begin(), star.corners.end());
    if (static_cast<int>(seen.size()) != size)
        fail("ValidationFailed", "vertex star revisits a corner");
    return star;
}

namespace {

struct Mat2 {
    Rat m00, m01, m10, m11;
    static Mat2 identity() { return {Rat(1), Rat(0), Rat(0), Rat(1)}; }
    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    bool is_identity() const { return m00 == 1 && m01 == 0 && m10 == 0 && m11 == 1; }
};

Mat2 step_matrix(const VertexStep& st) {
    return {Rat(0), Rat(1), st.gamma0, st.beta0};
}

// A 2x2 transition admits a proper sector iff it has a non-positive entry in
// each row and on the main diagonal.
bool sector_ok(const Mat2& t) {
    return (t.m00 <= 0 || t.m01 <= 0) && (t.m10 <= 0 || t.m11 <= 0) &&
           (t.m00 <= 0 || t.m11 <= 0);
}

std::pair<Rat, Rat> crossing_pair(const VertexStar& star) {
    auto bP = [&](int k) { return star.steps[k - 1].betaPrime0; };
    auto gP = [&](int k) { return star.steps[k - 1].gammaPrime0; };
    auto g0 = [&](int k) { return star.steps[k - 1].gamma0; };
    Rat h1 = bP(4) + g0(3) * gP(1) + g0(4) * (bP(2) + g0(1) * gP(3));
    Rat h2 = bP(3) + g0(2) * gP(4) + g0(3) * (bP(1) + g0(4) * gP(2));
    return {h1, h2};
}

} // namespace

VertexReport check_vertex(const Surface& s, const SurfaceData& d, int orbit) {
    VertexReport r;
    r.orbit = orbit;
    r.label = s.orbitLabel[orbit];
    r.interior = !s.orbitOnBoundary[orbit];
    r.valency = static_cast<int>(s.orbitSlots[orbit].size());

    VertexStar star;
    try {
        star = vertex_star(s, d, orbit);
    } catch (const Error&) {
        r.dataUsable = false;
        r.cycleClosed = r.sectorsOK = false;
        return r;
    }
    for (const auto& st : star.steps)
        if (gluing_data_defect(d.edges[st.gluing])) r.dataUsable = false;
    if (!r.dataUsable) {
        r.cycleClosed = r.sectorsOK = false;
        return r;
    }

    const int m = static_cast<int>(star.steps.size());
    Mat2 t = Mat2::identity();
    r.sectorsOK = true;
    for (int k = 0; k < m; ++k) {
        t = step_matrix(star.steps[k]) * t;
        bool last = (k == m - 1);
        if (r.interior ? !last : true)
            if (!sector_ok(t)) r.sectorsOK = false;
    }
    if (r.interior) {
        r.cycleClosed = t.is_identity();
        if (r.cycleClosed && r.valency == 4 &&
            std::all_of(star.steps.begin(), star.steps.end(),
                        [](const VertexStep& st) { return st.joining; })) {
            r.crossing = true;
            auto [h1, h2] = crossing_pair(star);
            r.crossingDefect = {h1, h2};
            r.crossingOK = (h1 == 0 && h2 == 0);
        }
    } else {
        // A boundary chain must not complete a full turn.
        if (m > 0 && t.m10 == 1 && t.m11 == 0) r.sectorsOK = false;
        r.cycleClosed = true;
    }
    return r;
}

std::pair<Rat, Rat> crossing_defect(const Surface& s, const SurfaceData& d, int orbit) {
    if (s.orbitOnBoundary[orbit]) fail("NotInterior", "vertex lies on the boundary");
    VertexStar star = vertex_star(s, d, orbit);
    if (star.valency() != 4 ||
        !std::all_of(star.steps.begin(), star.steps.end(),
                     [](const VertexStep& st) { return st.joining; }))
        fail("NotCrossing", "vertex is not a crossing (valency 4, all edges joining)");
    return crossing_pair(star);
}

ValidationReport validate_g1(const Surface& s, const SurfaceData& d) {
    ValidationReport rep;
    if (d.edges.size() != s.gluings.size())
        fail("MissingGluing", "surface and data disagree on the number of interior edges");
    for (int gi = 0; gi < static_cast<int>(d.edges.size()); ++gi)
        if (auto defect = gluing_data_defect(d.edges[gi])) {
            rep.edgeDefects.emplace_back(gi, *defect);
            rep.ok = false;
        }
    for (int o = 0; o < s.orbit_count(); ++o) {
        VertexReport vr = check_vertex(s, d, o);
        if (!vr.ok()) rep.ok = false;
        if (vr.crossing && vr.ok()) ++rep.crossingCount;
        rep.vertices.push_back(std::move(vr));
    }
    return rep;
}

} // namespace g1
