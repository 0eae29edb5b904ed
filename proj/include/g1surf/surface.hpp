#pragma once

#include "g1surf/bbform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g1 {

struct Polygon {
    FaceKind kind = FaceKind::Triangle;
    std::vector<std::string> vertices; // corner labels, counterclockwise
};

// One identified pair of polygon edges. Local edge e of a face runs from local
// vertex e to local vertex (e+1) mod n. With reversed=false the edges are
// identified start-to-start; reversed=true matches start to end (the usual
// case when both faces are traversed counterclockwise).
struct GluingTopo {
    int faceA = 0, edgeA = 0;
    int faceB = 0, edgeB = 0;
    bool reversed = true;
};

// A corner of a face: (face index, local vertex index).
struct Slot {
    int face = 0, vert = 0;
    bool operator==(const Slot& o) const { return face == o.face && vert == o.vert; }
    bool operator<(const Slot& o) const {
        return face < o.face || (face == o.face && vert < o.vert);
    }
};

struct Surface {
    std::vector<Polygon> polygons;
    std::vector<GluingTopo> gluings;

    // Derived vertex/edge tables.
    std::vector<std::vector<int>> gluingAt;     // [face][edge] -> gluing index or -1
    std::vector<std::vector<int>> orbitAt;      // [face][vert] -> vertex orbit id
    std::vector<std::vector<Slot>> orbitSlots;  // [orbit] -> member slots (sorted)
    std::vector<std::string> orbitLabel;        // representative corner label
    std::vector<bool> orbitOnBoundary;
    std::vector<std::pair<int, int>> boundaryEdges; // (face, edge), unglued

    int nfaces() const { return static_cast<int>(polygons.size()); }
    int nverts_of(int face) const { return nverts(polygons[face].kind); }
    int orbit_count() const { return static_cast<int>(orbitSlots.size()); }

    // Other endpoint data of a gluing: the slot on (face,edge)'s partner that
    // is identified with the given end (0 = edge start, 1 = edge end).
    Slot edge_end_slot(int face, int edge, int end) const;
};

// Validates and indexes a polygonal complex. Throws Error with codes
// EdgeReuse (an edge side appears in two gluings or twice in one), SelfGlue
// (an edge glued to itself), ParseError (indices out of range, bad labels),
// Disconnected (faces do not form one component).
Surface build_surface(std::vector<Polygon> polygons, std::vector<GluingTopo> gluings);

// Derives gluings by matching edges whose endpoint labels coincide as sets.
// Label pairs must determine edges uniquely: a pair seen more than twice is
// EdgeReuse, an edge with equal endpoint labels is ParseError. Edges seen
// once stay boundary.
std::vector<GluingTopo> gluings_from_labels(const std::vector<Polygon>& polygons);

struct Census {
    int faces = 0, triangles = 0, rectangles = 0;
    int interiorEdges = 0, boundaryEdges = 0;
    int vertices = 0, interiorVertices = 0, boundaryVertices = 0;
};
Census census(const Surface& s);

struct TopologyReport {
    bool orientable = false;
    int boundaryComponents = 0;
    int eulerCapped = 0;                // Euler characteristic with boundaries capped
    std::optional<int> genus;           // orientable surfaces only
};
TopologyReport topology(const Surface& s);

} // namespace g1
