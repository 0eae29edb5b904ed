#include "g1surf/builder.hpp"

#include "g1surf/errors.hpp"
#include "g1surf/linalg.hpp"

#include <algorithm>
#include <utility>

namespace g1 {

namespace {

// 2x2 matrices as row-major arrays.
using Mat2 = std::array<Rat, 4>;

Mat2 mul(const Mat2& l, const Mat2& r) {
    return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3],
            l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]};
}

Rat det2(const Vec2& p, const Vec2& q) { return p[0] * q[1] - p[1] * q[0]; }

} // namespace

bool vertex_cycle_closes(const VertexDesign& d) {
    Mat2 t{1, 0, 0, 1};
    for (const VertexEnd& e : d.ends) t = mul(Mat2{0, 1, e.gamma, e.beta}, t);
    return t[0] == 1 && t[1] == 0 && t[2] == 0 && t[3] == 1;
}

std::pair<Rat, Rat> hahn_vertex_data(int n) {
    if (n < 3) fail("InfeasibleParams", "valency must be at least 3");
    switch (n) {
    case 3: return {Rat(-1), Rat(-1)};
    case 4: return {Rat(0), Rat(-1)};
    case 6: return {Rat(1), Rat(-1)};
    default:
        fail("IrrationalValue", "2cos(2pi/" + std::to_string(n) +
                                    ") is irrational; supply a rational surrogate");
    }
}

VertexDesign solve_unit_gamma_vertex(int n, const std::vector<Rat>& betas) {
    if (n < 3 || n > 6) fail("InfeasibleParams", "closure relations cover valencies 3..6");
    const size_t need = n == 3 ? 0 : static_cast<size_t>(n) - 2;
    if (betas.size() != need)
        fail("InfeasibleParams", "valency " + std::to_string(n) + " takes " +
                                     std::to_string(need) + " free beta values");

    std::vector<Rat> b;
    if (n == 3) {
        b = {Rat(-1), Rat(-1), Rat(-1)};
    } else if (n == 4) {
        // one of the two betas must vanish; the opposite edges then mirror
        if (betas[0] != 0 && betas[1] != 0)
            fail("InfeasibleParams", "valency 4 needs beta1 = 0 or beta2 = 0");
        b = {betas[0], betas[1], -betas[0], -betas[1]};
    } else if (n == 5) {
        if (betas[0] + betas[2] != 1 + betas[0] * betas[1] * betas[2])
            fail("InfeasibleParams", "beta1 + beta3 = 1 + beta1 beta2 beta3 fails");
        b = {betas[0], betas[1], betas[2], 1 + betas[0] * betas[1], 1 + betas[1] * betas[2]};
    } else {
        const Rat &b1 = betas[0], &b2 = betas[1], &b3 = betas[2], &b4 = betas[3];
        if (b1 * b2 + b1 * b4 + b3 * b4 != 2 + b1 * b2 * b3 * b4)
            fail("InfeasibleParams",
                 "beta1 beta2 + beta1 beta4 + beta3 beta4 = 2 + beta1 beta2 beta3 beta4 fails");
        b = {b1, b2, b3, b4, b1 + b3 - b1 * b2 * b3, b2 + b4 - b2 * b3 * b4};
    }

    VertexDesign d;
    for (const Rat& beta : b) d.ends.push_back({beta, Rat(-1), std::nullopt});
    if (!vertex_cycle_closes(d)) fail("InternalError", "vertex relations failed to close");
    return d;
}

VertexDesign fan_from_vectors(const std::vector<Vec2>& v) {
    const size_t n = v.size();
    if (n < 3) fail("InfeasibleParams", "a fan needs at least three vectors");
    VertexDesign d;
    for (size_t k = 0; k < n; ++k) {
        const Vec2& prev = v[(k + n - 1) % n];
        const Vec2& cur = v[k];
        const Vec2& next = v[(k + 1) % n];
        Rat den = det2(cur, next);
        if (den == 0) fail("InfeasibleParams", "consecutive fan vectors are dependent");
        Rat beta = det2(prev, next) / den;
        Rat gamma = det2(cur, prev) / den;
        if (gamma >= 0) fail("InfeasibleParams", "fan does not alternate sides: gamma >= 0");
        d.ends.push_back({beta, gamma, std::nullopt});
    }
    // the star walk runs against the fan orientation
    std::reverse(d.ends.begin(), d.ends.end());
    if (!vertex_cycle_closes(d)) fail("InternalError", "fan data failed to close");
    return d;
}

std::pair<Rat, Rat> far_end_values(const Rat& beta, const Rat& gamma, int sh1, int sh2) {
    return {Rat(sh1) - Rat(sh2) * gamma - beta, gamma};
}

namespace {

Rat beta_prime_at1(const EdgeGluing& g) {
    Rat a1 = g.a(Rat(1));
    return (g.b.derivative()(Rat(1)) * a1 - g.b(Rat(1)) * g.a.derivative()(Rat(1))) / (a1 * a1);
}

UniPoly from_coeffs(const QVec& x, size_t first, size_t count) {
    return UniPoly(std::vector<Rat>(x.begin() + static_cast<long>(first),
                                    x.begin() + static_cast<long>(first + count)));
}

} // namespace

EdgeGluing interpolate_edge(const EdgeEnd& end0, const EdgeEnd& end1, FaceKind kind1,
                            FaceKind kind2, InterpPolicy policy) {
    if (end0.gamma >= 0 || end1.gamma >= 0)
        fail("InfeasibleInterpolation", "gamma end values must be negative");

    UniPoly a, b, c;
    if (policy == InterpPolicy::FractionalLinear) {
        // unknowns (a0, a1, b0, b1, c0, c1), shared linear denominator
        std::vector<QVec> rows;
        QVec rhs;
        rows.push_back({-end0.beta, 0, 1, 0, 0, 0});
        rhs.push_back(0);
        rows.push_back({-end1.beta, -end1.beta, 1, 1, 0, 0});
        rhs.push_back(0);
        rows.push_back({-end0.gamma, 0, 0, 0, 1, 0});
        rhs.push_back(0);
        rows.push_back({-end1.gamma, -end1.gamma, 0, 0, 1, 1});
        rhs.push_back(0);
        if (end0.betaPrime) { // b1 - beta(0) a1 - p a0 = 0
            rows.push_back({-*end0.betaPrime, -end0.beta, 0, 1, 0, 0});
            rhs.push_back(0);
        }
        if (end1.betaPrime) { // b1 - beta(1) a1 - q (a0 + a1) = 0
            rows.push_back({-*end1.betaPrime, -end1.beta - *end1.betaPrime, 0, 1, 0, 0});
            rhs.push_back(0);
        }
        if (!end0.betaPrime && !end1.betaPrime) { // constant denominator by default
            rows.push_back({0, 1, 0, 0, 0, 0});
            rhs.push_back(0);
        }
        rows.push_back({1, 0, 0, 0, 0, 0}); // scale: a(0) = 1
        rhs.push_back(1);
        SolveResult sol = solve_linear(rows, rhs);
        if (!sol.consistent)
            fail("InfeasibleInterpolation", "no fractional-linear data meets the end conditions");
        a = from_coeffs(sol.particular, 0, 2);
        b = from_coeffs(sol.particular, 2, 2);
        c = from_coeffs(sol.particular, 4, 2);
    } else {
        const int deg = policy == InterpPolicy::Linear ? 1 : policy == InterpPolicy::Quadratic ? 2 : 3;
        a = UniPoly(Rat(1));
        c = UniPoly{end0.gamma, end1.gamma - end0.gamma};
        std::vector<QVec> rows;
        QVec rhs;
        QVec at0(static_cast<size_t>(deg) + 1, Rat(0)), at1(static_cast<size_t>(deg) + 1, Rat(1));
        at0[0] = 1;
        rows.push_back(at0);
        rhs.push_back(end0.beta);
        rows.push_back(at1);
        rhs.push_back(end1.beta);
        if (end0.betaPrime) {
            QVec r(static_cast<size_t>(deg) + 1, Rat(0));
            r[1] = 1;
            rows.push_back(r);
            rhs.push_back(*end0.betaPrime);
        }
        if (end1.betaPrime) {
            QVec r(static_cast<size_t>(deg) + 1, Rat(0));
            for (int i = 1; i <= deg; ++i) r[static_cast<size_t>(i)] = i;
            rows.push_back(r);
            rhs.push_back(*end1.betaPrime);
        }
        SolveResult sol = solve_linear(rows, rhs);
        if (!sol.consistent)
            fail("InfeasibleInterpolation", "numerator degree too low for the end conditions");
        b = from_coeffs(sol.particular, 0, static_cast<size_t>(deg) + 1);
    }

    EdgeGluing g{a, b, c, kind1, kind2};
    if (auto defect = gluing_data_defect(g))
        fail("InfeasibleInterpolation", "interpolated data inadmissible: " + *defect);
    if (g.beta_at(Rat(0)) != end0.beta || g.gamma_at(Rat(0)) != end0.gamma ||
        g.beta_at(Rat(1)) != end1.beta || g.gamma_at(Rat(1)) != end1.gamma)
        fail("InternalError", "interpolation lost an end value");
    if (end0.betaPrime && g.beta_prime0() != *end0.betaPrime)
        fail("InfeasibleInterpolation", "prescribed derivative at u=0 not attainable");
    if (end1.betaPrime && beta_prime_at1(g) != *end1.betaPrime)
        fail("InfeasibleInterpolation", "prescribed derivative at u=1 not attainable");
    return normalized(g);
}

EquatorPlan solve_unit_gamma_equator(std::vector<EquatorEdge> cycle) {
    const size_t m = cycle.size();
    if (m == 0) fail("InfeasibleParams", "empty equator");
    for (const EquatorEdge& e : cycle) {
        if (!(e.a + e.c).is_zero())
            fail("InfeasibleParams", "equator solver needs gamma = -1 (c = -a) on every edge");
        if (!nonvanishing_on_01(e.a))
            fail("InfeasibleParams", "equator denominator vanishes on the edge");
    }

    auto h1 = [](const EquatorEdge& e) -> Rat {
        return Rat(e.sh1) * e.a(Rat(1)) - Rat(e.sh2) * e.c(Rat(1));
    };
    // Transport of h'(0) expressed affinely in the seed s: t_j = p + q s.
    // Across edge j and the following crossing vertex:
    //   h'(1) = 2 h(1) - t_j                                   (quadratic h, h(0)=0)
    //   t_{j+1} = a_{j+1}(0) (h'(1) - sh1 a'(1) + sh2 c'(1)) / a_j(1)
    Rat p(0), q(1);
    for (size_t j = 0; j < m; ++j) {
        const EquatorEdge& e = cycle[j];
        const EquatorEdge& next = cycle[(j + 1) % m];
        Rat edgeTerm = 2 * h1(e) - Rat(e.sh1) * e.a.derivative()(Rat(1)) +
                       Rat(e.sh2) * e.c.derivative()(Rat(1));
        Rat mu = next.a(Rat(0)) / e.a(Rat(1));
        p = mu * (edgeTerm - p);
        q = -mu * q;
    }

    EquatorPlan plan;
    plan.edges = std::move(cycle);
    if (q != 1) {
        plan.seed = p / (1 - q);
        plan.seedFree = false;
        plan.cubicFallback = false;
    } else if (p == 0) {
        plan.seedFree = true;
        plan.cubicFallback = false;
        plan.seed = h1(plan.edges[0]); // linear numerator on the first edge
    } else {
        plan.seedFree = false;
        plan.cubicFallback = true;
        plan.seed = h1(plan.edges[0]);
    }

    Rat t = plan.seed;
    for (size_t j = 0; j < m; ++j) {
        const EquatorEdge& e = plan.edges[j];
        Rat h = h1(e);
        if (plan.cubicFallback && j + 1 == m) {
            // cubic numerator honouring both end derivatives, closing on the seed
            Rat d1 = plan.seed * e.a(Rat(1)) / plan.edges[0].a(Rat(0)) +
                     Rat(e.sh1) * e.a.derivative()(Rat(1)) - Rat(e.sh2) * e.c.derivative()(Rat(1));
            plan.numerators.push_back(
                UniPoly{Rat(0), t, 3 * h - 2 * t - d1, d1 + t - 2 * h});
        } else {
            plan.numerators.push_back(UniPoly{Rat(0), t, h - t});
        }
        const EquatorEdge& next = plan.edges[(j + 1) % m];
        Rat dfar = 2 * h - t - Rat(e.sh1) * e.a.derivative()(Rat(1)) +
                   Rat(e.sh2) * e.c.derivative()(Rat(1));
        t = next.a(Rat(0)) * dfar / e.a(Rat(1));
    }
    return plan;
}

namespace {

// Transversal chart direction along an edge: constant for a triangle, linear
// in u for a rectangle (the bilinear term). Returned as coordinate polynomials.
std::array<UniPoly, 2> chart_transversal(const std::vector<Vec2>& corners, FaceKind kind,
                                         int originCorner, int edgePartner) {
    const int n = nverts(kind);
    const Vec2& q = corners[static_cast<size_t>(originCorner)];
    if (kind == FaceKind::Triangle) {
        int third = 3 - originCorner - edgePartner;
        const Vec2& w = corners[static_cast<size_t>(third)];
        return {UniPoly(w[0] - q[0]), UniPoly(w[1] - q[1])};
    }
    int next = (originCorner + 1) % n, prev = (originCorner + n - 1) % n;
    int side = edgePartner == next ? prev : next;
    int diag = (originCorner + 2) % n;
    const Vec2& w = corners[static_cast<size_t>(side)];
    const Vec2& r = corners[static_cast<size_t>(edgePartner)];
    const Vec2& d = corners[static_cast<size_t>(diag)];
    return {UniPoly{w[0] - q[0], d[0] - w[0] - r[0] + q[0]},
            UniPoly{w[1] - q[1], d[1] - w[1] - r[1] + q[1]}};
}

} // namespace

EdgeGluing parametric_gluing(const std::vector<Vec2>& side1, FaceKind kind1, int edge1,
                             int originEnd, const std::vector<Vec2>& side2, FaceKind kind2,
                             int edge2, bool reversed) {
    const int n1 = nverts(kind1), n2 = nverts(kind2);
    if (static_cast<int>(side1.size()) != n1 || static_cast<int>(side2.size()) != n2)
        fail("ParseError", "corner count does not match the face kind");
    if (edge1 < 0 || edge1 >= n1 || edge2 < 0 || edge2 >= n2 || (originEnd & ~1) != 0)
        fail("ParseError", "edge index out of range");

    int s0 = edge1, s1 = (edge1 + 1) % n1;
    int q1 = originEnd ? s1 : s0, q1b = originEnd ? s0 : s1;
    int t0 = edge2, t1 = (edge2 + 1) % n2;
    // side-2 corner matched to side 1's u = 0 corner
    bool atStart = (q1 == s0);
    int q2 = (atStart == !reversed) ? t0 : t1;
    int q2b = (q2 == t0) ? t1 : t0;

    const Vec2& p0 = side1[static_cast<size_t>(q1)];
    const Vec2& p1 = side1[static_cast<size_t>(q1b)];
    if (side2[static_cast<size_t>(q2)] != p0 || side2[static_cast<size_t>(q2b)] != p1)
        fail("ParseError", "side charts do not agree along the shared edge");

    Vec2 e{p1[0] - p0[0], p1[1] - p0[1]};
    auto w1 = chart_transversal(side1, kind1, q1, q1b);
    auto w2 = chart_transversal(side2, kind2, q2, q2b);

    UniPoly a = w2[1] * e[0] - w2[0] * e[1]; // det(e, w2)
    UniPoly b = w1[0] * w2[1] - w1[1] * w2[0];
    UniPoly c = w1[1] * e[0] - w1[0] * e[1]; // det(e, w1)
    if (a.is_zero()) fail("InfeasibleParams", "degenerate chart pair: edge and side-2 transversal are dependent");

    EdgeGluing g = normalized(EdgeGluing{a, b, c, kind1, kind2});
    if (auto defect = gluing_data_defect(g))
        fail("InfeasibleParams", "parametric data inadmissible: " + *defect);
    return g;
}

int find_gluing(const Surface& s, const std::string& a, const std::string& b) {
    for (size_t gi = 0; gi < s.gluings.size(); ++gi) {
        const GluingTopo& t = s.gluings[gi];
        const Polygon& f = s.polygons[static_cast<size_t>(t.faceA)];
        const std::string& x = f.vertices[static_cast<size_t>(t.edgeA)];
        const std::string& y = f.vertices[static_cast<size_t>((t.edgeA + 1) % s.nverts_of(t.faceA))];
        if ((x == a && y == b) || (x == b && y == a)) return static_cast<int>(gi);
    }
    fail("MissingGluing", "no interior edge joins '" + a + "' and '" + b + "'");
}

SurfaceData parametric_data(const Surface& s, const std::vector<std::vector<Vec2>>& coords) {
    std::vector<EdgeGluing> edges;
    for (size_t gi = 0; gi < s.gluings.size(); ++gi) {
        EdgeFrame f = canonical_frame(s, static_cast<int>(gi));
        const GluingTopo& t = s.gluings[gi];
        bool side1IsA = (f.face == t.faceA && f.edge == t.edgeA);
        int f2 = side1IsA ? t.faceB : t.faceA;
        int e2 = side1IsA ? t.edgeB : t.edgeA;
        edges.push_back(parametric_gluing(coords[static_cast<size_t>(f.face)],
                                          s.polygons[static_cast<size_t>(f.face)].kind, f.edge,
                                          f.originEnd, coords[static_cast<size_t>(f2)],
                                          s.polygons[static_cast<size_t>(f2)].kind, e2,
                                          t.reversed));
    }
    return make_data(s, std::move(edges));
}

namespace {

Polygon tri(std::vector<std::string> v) { return Polygon{FaceKind::Triangle, std::move(v)}; }
Polygon rect(std::vector<std::string> v) { return Polygon{FaceKind::Rectangle, std::move(v)}; }

Surface labeled_surface(std::vector<Polygon> polys) {
    std::vector<GluingTopo> gl = gluings_from_labels(polys);
    return build_surface(std::move(polys), std::move(gl));
}

// Assigns one (a,b,c) triple, given in a stated frame, to the edge named by
// its endpoint labels; the stored data is the canonical reframing.
struct FramedDatum {
    std::string x, y;
    EdgeFrame frame;
    UniPoly a, b, c;
};

SurfaceData framed_data(const Surface& s, const std::vector<FramedDatum>& entries) {
    std::vector<EdgeGluing> edges(s.gluings.size());
    std::vector<bool> seen(s.gluings.size(), false);
    for (const FramedDatum& d : entries) {
        int gi = find_gluing(s, d.x, d.y);
        const GluingTopo& t = s.gluings[static_cast<size_t>(gi)];
        bool onA = (d.frame.face == t.faceA && d.frame.edge == t.edgeA);
        int otherFace = onA ? t.faceB : t.faceA;
        EdgeGluing g{d.a, d.b, d.c, s.polygons[static_cast<size_t>(d.frame.face)].kind,
                     s.polygons[static_cast<size_t>(otherFace)].kind};
        edges[static_cast<size_t>(gi)] =
            normalized(reframe(s, gi, g, d.frame, canonical_frame(s, gi)));
        seen[static_cast<size_t>(gi)] = true;
    }
    for (bool b : seen)
        if (!b) fail("MissingGluing", "an interior edge was left without data");
    return make_data(s, std::move(edges));
}

SurfaceData uniform_data(const Surface& s, const UniPoly& a, const UniPoly& b, const UniPoly& c) {
    std::vector<EdgeGluing> edges;
    for (size_t gi = 0; gi < s.gluings.size(); ++gi) {
        EdgeFrame f = canonical_frame(s, static_cast<int>(gi));
        const GluingTopo& t = s.gluings[gi];
        bool side1IsA = (f.face == t.faceA && f.edge == t.edgeA);
        int f2 = side1IsA ? t.faceB : t.faceA;
        edges.push_back(EdgeGluing{a, b, c, s.polygons[static_cast<size_t>(f.face)].kind,
                                   s.polygons[static_cast<size_t>(f2)].kind});
    }
    return make_data(s, std::move(edges));
}

Surface pruned_octahedron_surface() {
    return labeled_surface({tri({"A", "E", "F"}), tri({"C", "F", "E"}), tri({"A", "B", "E"}),
                            tri({"B", "C", "E"}), tri({"A", "F", "D"}), tri({"C", "D", "F"}),
                            rect({"A", "D", "C", "B"})});
}

BuiltinSurface pruned_octahedron(bool fractionalLinearRim) {
    Surface s = pruned_octahedron_surface();
    const UniPoly one(Rat(1)), minusOne(Rat(-1));
    const UniPoly lin{Rat(0), Rat(2)};       // 2u
    const UniPoly quad{Rat(0), Rat(2), Rat(1)}; // 2u + u^2
    const UniPoly flA{Rat(3), Rat(-1)};      // 3 - u
    const UniPoly flB{Rat(0), Rat(6)};       // 6u
    const UniPoly flC{Rat(-3), Rat(1)};      // -(3 - u)

    std::vector<FramedDatum> entries = {
        {"E", "F", {0, 1, 0}, one, lin, minusOne},
        {"A", "E", {2, 2, 0}, one, lin, minusOne},
        {"F", "A", {4, 0, 1}, one, lin, minusOne},
        {"E", "C", {3, 1, 1}, one, lin, minusOne},
        {"C", "F", {5, 2, 0}, one, lin, minusOne},
        {"A", "B", {2, 0, 0}, one, lin, minusOne},
        {"A", "D", {4, 2, 1}, one, lin, minusOne},
        {"C", "B", {3, 0, 1}, one, lin, minusOne},
        {"C", "D", {5, 0, 0}, one, lin, minusOne},
    };
    if (fractionalLinearRim) {
        entries.push_back({"E", "B", {2, 1, 1}, flA, flB, flC});
        entries.push_back({"F", "D", {4, 1, 0}, flA, flB, flC});
    } else {
        entries.push_back({"E", "B", {2, 1, 1}, one, quad, minusOne});
        entries.push_back({"F", "D", {4, 1, 0}, one, quad, minusOne});
    }
    return {s, framed_data(s, entries)};
}

BuiltinSurface octahedron() {
    Surface s = labeled_surface({tri({"A", "B", "N"}), tri({"B", "C", "N"}), tri({"C", "D", "N"}),
                                 tri({"D", "A", "N"}), tri({"B", "A", "S"}), tri({"C", "B", "S"}),
                                 tri({"D", "C", "S"}), tri({"A", "D", "S"})});
    SurfaceData d = uniform_data(s, UniPoly(Rat(1)), UniPoly{Rat(0), Rat(2)}, UniPoly(Rat(-1)));
    return {std::move(s), std::move(d)};
}

BuiltinSurface tetrahedron() {
    Surface s = labeled_surface(
        {tri({"P", "Q", "S"}), tri({"Q", "R", "S"}), tri({"R", "P", "S"}), tri({"P", "R", "Q"})});
    SurfaceData d = uniform_data(s, UniPoly(Rat(1)), UniPoly{Rat(-1), Rat(4)}, UniPoly(Rat(-1)));
    return {std::move(s), std::move(d)};
}

BuiltinSurface cube() {
    Surface s = labeled_surface({rect({"A", "D", "C", "B"}), rect({"E", "F", "G", "H"}),
                                 rect({"A", "B", "F", "E"}), rect({"B", "C", "G", "F"}),
                                 rect({"C", "D", "H", "G"}), rect({"D", "A", "E", "H"})});
    SurfaceData d = uniform_data(s, UniPoly(Rat(1)), UniPoly{Rat(-1), Rat(2)}, UniPoly(Rat(-1)));
    return {std::move(s), std::move(d)};
}

BuiltinSurface torus_two_triangles() {
    std::vector<Polygon> polys = {tri({"O", "X", "Y"}), tri({"X", "Z", "Y"})};
    std::vector<GluingTopo> gl = {{0, 0, 1, 1, true}, {0, 1, 1, 2, true}, {0, 2, 1, 0, true}};
    Surface s = build_surface(std::move(polys), std::move(gl));

    const std::vector<Vec2> f0 = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    const std::vector<Vec2> f1 = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    // deck translation moving the f1 copy onto f0's plane chart, per gluing
    const std::vector<Vec2> shifts = {{Rat(0), Rat(-1)}, {Rat(0), Rat(0)}, {Rat(-1), Rat(0)}};

    std::vector<EdgeGluing> edges;
    for (size_t gi = 0; gi < s.gluings.size(); ++gi) {
        const GluingTopo& t = s.gluings[gi];
        EdgeFrame f = canonical_frame(s, static_cast<int>(gi));
        std::vector<Vec2> shifted = f1;
        for (Vec2& p : shifted) {
            p[0] += shifts[gi][0];
            p[1] += shifts[gi][1];
        }
        edges.push_back(parametric_gluing(f0, FaceKind::Triangle, f.edge, f.originEnd, shifted,
                                          FaceKind::Triangle, t.edgeB, t.reversed));
    }
    return {s, make_data(s, std::move(edges))};
}

Surface square_fan_surface() {
    return labeled_surface(
        {tri({"A", "B", "E"}), tri({"B", "C", "E"}), tri({"C", "D", "E"}), tri({"D", "A", "E"})});
}

std::vector<std::vector<Vec2>> square_fan_coords() {
    const Vec2 A{Rat(0), Rat(0)}, B{Rat(1), Rat(0)}, C{Rat(1), Rat(1)}, D{Rat(0), Rat(1)},
        E{rat(1, 2), rat(1, 2)};
    return {{A, B, E}, {B, C, E}, {C, D, E}, {D, A, E}};
}

BuiltinSurface planar_triangulated_square() {
    Surface s = square_fan_surface();
    SurfaceData d = parametric_data(s, square_fan_coords());
    return {std::move(s), std::move(d)};
}

} // namespace

std::vector<std::string> builtin_names() {
    return {"pruned-octahedron", "pruned-octahedron-alt", "octahedron",          "cube",
            "tetrahedron",      "torus-two-triangles",   "planar-triangulated-square"};
}

BuiltinSurface builtin_surface(const std::string& name) {
    if (name == "pruned-octahedron") return pruned_octahedron(false);
    if (name == "pruned-octahedron-alt") return pruned_octahedron(true);
    if (name == "octahedron") return octahedron();
    if (name == "cube") return cube();
    if (name == "tetrahedron") return tetrahedron();
    if (name == "torus-two-triangles") return torus_two_triangles();
    if (name == "planar-triangulated-square") return planar_triangulated_square();
    fail("UnknownName", "no built-in surface named '" + name + "'");
}

BuiltinSurface contra_crossing_fixture() {
    Surface s = square_fan_surface();
    SurfaceData d = uniform_data(s, UniPoly(Rat(1)), UniPoly(), UniPoly(Rat(-1)));

    int center = -1;
    for (int o = 0; o < s.orbit_count(); ++o)
        if (s.orbitLabel[static_cast<size_t>(o)] == "E") center = o;
    // place all four data triples in the star's step frames (u = 0 at the
    // center), so every edge joins there; the first one tilts the crossing
    VertexStar star = vertex_star(s, d, center);
    for (size_t i = 0; i < star.steps.size(); ++i) {
        const VertexStep& step = star.steps[i];
        EdgeGluing g = i == 0 ? EdgeGluing{UniPoly(Rat(2)), UniPoly{Rat(0), Rat(1)},
                                           UniPoly{Rat(-2), Rat(1)}, FaceKind::Triangle,
                                           FaceKind::Triangle}
                              : EdgeGluing{UniPoly(Rat(1)), UniPoly(), UniPoly(Rat(-1)),
                                           FaceKind::Triangle, FaceKind::Triangle};
        d.edges[static_cast<size_t>(step.gluing)] = normalized(
            reframe(s, step.gluing, g, step.frame, canonical_frame(s, step.gluing)));
    }
    return {std::move(s), std::move(d)};
}

} // namespace g1
