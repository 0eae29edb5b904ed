#include "g1surf/surface.hpp"

#include "g1surf/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace g1 {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Slot Surface::edge_end_slot(int face, int edge, int end) const {
    int gi = gluingAt[face][edge];
    if (gi < 0) fail("MissingGluing", "edge has no partner");
    const GluingTopo& g = gluings[gi];
    bool onA = (g.faceA == face && g.edgeA == edge);
    int pf = onA ? g.faceB : g.faceA;
    int pe = onA ? g.edgeB : g.edgeA;
    int pend = g.reversed ? 1 - end : end;
    int n = nverts(polygons[pf].kind);
    return Slot{pf, pend == 0 ? pe : (pe + 1) % n};
}

Surface build_surface(std::vector<Polygon> polygons, std::vector<GluingTopo> gluings) {
    Surface s;
    s.polygons = std::move(polygons);
    s.gluings = std::move(gluings);

    const int F = s.nfaces();
    if (F == 0) fail("ParseError", "surface has no polygons");
    for (int f = 0; f < F; ++f)
        if (static_cast<int>(s.polygons[f].vertices.size()) != s.nverts_of(f))
            fail("ParseError", "polygon " + std::to_string(f) + " has wrong vertex count");

    s.gluingAt.assign(F, {});
    for (int f = 0; f < F; ++f) s.gluingAt[f].assign(s.nverts_of(f), -1);

    for (int gi = 0; gi < static_cast<int>(s.gluings.size()); ++gi) {
        const GluingTopo& g = s.gluings[gi];
        auto check_side = [&](int f, int e) {
            if (f < 0 || f >= F || e < 0 || e >= s.nverts_of(f))
                fail("ParseError", "gluing " + std::to_string(gi) + " is out of range");
        };
        check_side(g.faceA, g.edgeA);
        check_side(g.faceB, g.edgeB);
        if (g.faceA == g.faceB && g.edgeA == g.edgeB)
            fail("SelfGlue", "gluing " + std::to_string(gi) + " identifies an edge with itself");
        for (auto [f, e] : {std::pair{g.faceA, g.edgeA}, std::pair{g.faceB, g.edgeB}}) {
            if (s.gluingAt[f][e] != -1)
                fail("EdgeReuse", "face " + std::to_string(f) + " edge " + std::to_string(e) +
                                      " appears in more than one gluing");
            s.gluingAt[f][e] = gi;
        }
    }

    // Connectivity over faces.
    {
        std::vector<bool> seen(F, false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int e = 0; e < s.nverts_of(f); ++e) {
                int gi = s.gluingAt[f][e];
                if (gi < 0) continue;
                const GluingTopo& g = s.gluings[gi];
                int other = (g.faceA == f && g.edgeA == e) ? g.faceB : g.faceA;
                if (!seen[other]) {
                    seen[other] = true;
                    stack.push_back(other);
                }
            }
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            fail("Disconnected", "the polygons do not form a connected complex");
    }

    // Vertex orbits via identified edge endpoints.
    std::vector<int> slotBase(F + 1, 0);
    for (int f = 0; f < F; ++f) slotBase[f + 1] = slotBase[f] + s.nverts_of(f);
    UnionFind uf(slotBase[F]);
    for (const GluingTopo& g : s.gluings) {
        int nA = s.nverts_of(g.faceA), nB = s.nverts_of(g.faceB);
        int aStart = slotBase[g.faceA] + g.edgeA;
        int aEnd = slotBase[g.faceA] + (g.edgeA + 1) % nA;
        int bStart = slotBase[g.faceB] + g.edgeB;
        int bEnd = slotBase[g.faceB] + (g.edgeB + 1) % nB;
        uf.unite(aStart, g.reversed ? bEnd : bStart);
        uf.unite(aEnd, g.reversed ? bStart : bEnd);
    }
    std::vector<int> orbitOf(slotBase[F], -1);
    s.orbitAt.assign(F, {});
    for (int f = 0; f < F; ++f) {
        s.orbitAt[f].assign(s.nverts_of(f), -1);
        for (int v = 0; v < s.nverts_of(f); ++v) {
            int root = uf.find(slotBase[f] + v);
            if (orbitOf[root] < 0) {
                orbitOf[root] = s.orbit_count();
                s.orbitSlots.push_back({});
            }
            int orb = orbitOf[root];
            s.orbitAt[f][v] = orb;
            s.orbitSlots[orb].push_back(Slot{f, v});
        }
    }
    s.orbitLabel.resize(s.orbit_count());
    for (int o = 0; o < s.orbit_count(); ++o) {
        std::sort(s.orbitSlots[o].begin(), s.orbitSlots[o].end());
        const Slot& rep = s.orbitSlots[o].front();
        s.orbitLabel[o] = s.polygons[rep.face].vertices[rep.vert];
    }

    s.orbitOnBoundary.assign(s.orbit_count(), false);
    for (int f = 0; f < F; ++f)
        for (int e = 0; e < s.nverts_of(f); ++e)
            if (s.gluingAt[f][e] < 0) {
                s.boundaryEdges.emplace_back(f, e);
                s.orbitOnBoundary[s.orbitAt[f][e]] = true;
                s.orbitOnBoundary[s.orbitAt[f][(e + 1) % s.nverts_of(f)]] = true;
            }
    return s;
}

std::vector<GluingTopo> gluings_from_labels(const std::vector<Polygon>& polygons) {
    struct Side {
        int face, edge;
        bool forward; // start label < end label
    };
    std::map<std::pair<std::string, std::string>, std::vector<Side>> sides;
    for (int f = 0; f < static_cast<int>(polygons.size()); ++f) {
        int n = nverts(polygons[f].kind);
        if (static_cast<int>(polygons[f].vertices.size()) != n)
            fail("ParseError", "polygon " + std::to_string(f) + " has wrong vertex count");
        for (int e = 0; e < n; ++e) {
            const std::string& a = polygons[f].vertices[e];
            const std::string& b = polygons[f].vertices[(e + 1) % n];
            if (a == b)
                fail("ParseError", "edge with equal endpoint labels '" + a +
                                       "'; give gluings explicitly instead");
            bool fwd = a < b;
            sides[{std::min(a, b), std::max(a, b)}].push_back(Side{f, e, fwd});
        }
    }
    std::vector<GluingTopo> out;
    for (const auto& [key, list] : sides) {
        if (list.size() > 2)
            fail("EdgeReuse", "edge " + key.first + "-" + key.second +
                                  " is shared by more than two polygons");
        if (list.size() < 2) continue;
        out.push_back(GluingTopo{list[0].face, list[0].edge, list[1].face, list[1].edge,
                                 list[0].forward != list[1].forward});
    }
    return out;
}

Census census(const Surface& s) {
    Census c;
    c.faces = s.nfaces();
    for (const auto& p : s.polygons)
        (p.kind == FaceKind::Triangle ? c.triangles : c.rectangles)++;
    c.interiorEdges = static_cast<int>(s.gluings.size());
    c.boundaryEdges = static_cast<int>(s.boundaryEdges.size());
    c.vertices = s.orbit_count();
    for (bool b : s.orbitOnBoundary)
        (b ? c.boundaryVertices : c.interiorVertices)++;
    return c;
}

TopologyReport topology(const Surface& s) {
    TopologyReport t;
    const int F = s.nfaces();

    // Orientation flags: a reversed gluing joins two counterclockwise faces
    // compatibly, an unreversed one flips.
    std::vector<int> flag(F, 0);
    t.orientable = true;
    flag[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e = 0; e < s.nverts_of(f); ++e) {
            int gi = s.gluingAt[f][e];
            if (gi < 0) continue;
            const GluingTopo& g = s.gluings[gi];
            int other = (g.faceA == f && g.edgeA == e) ? g.faceB : g.faceA;
            int want = flag[f] * (g.reversed ? 1 : -1);
            if (flag[other] == 0) {
                flag[other] = want;
                stack.push_back(other);
            } else if (flag[other] != want) {
                t.orientable = false;
            }
        }
    }

    // Boundary components: boundary edges meeting at a boundary vertex orbit.
    const int nb = static_cast<int>(s.boundaryEdges.size());
    if (nb > 0) {
        UnionFind uf(nb);
        std::vector<std::vector<int>> atOrbit(s.orbit_count());
        for (int i = 0; i < nb; ++i) {
            auto [f, e] = s.boundaryEdges[i];
            int n = s.nverts_of(f);
            atOrbit[s.orbitAt[f][e]].push_back(i);
            atOrbit[s.orbitAt[f][(e + 1) % n]].push_back(i);
        }
        for (const auto& group : atOrbit)
            for (std::size_t i = 1; i < group.size(); ++i) uf.unite(group[0], group[i]);
        int comps = 0;
        for (int i = 0; i < nb; ++i)
            if (uf.find(i) == i) ++comps;
        t.boundaryComponents = comps;
    }

    int V = s.orbit_count();
    int E = static_cast<int>(s.gluings.size()) + nb;
    t.eulerCapped = V - E + F + t.boundaryComponents;
    if (t.orientable && (2 - t.eulerCapped) % 2 == 0) t.genus = (2 - t.eulerCapped) / 2;
    return t;
}

} // namespace g1
