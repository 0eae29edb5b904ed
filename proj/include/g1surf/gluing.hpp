#pragma once

#include "g1surf/surface.hpp"
#include "g1surf/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g1 {

// Transition data across one interior edge in a definite frame. Side 1 and
// side 2 are the two charts meeting along the edge; u is the shared edge
// parameter, increasing from the frame's origin vertex. The data encodes the
// derivative relation  dg1/dv1 = (b/a) dg2/du + (c/a) dg2/dv2  on the edge.
struct EdgeGluing {
    UniPoly a, b, c;
    FaceKind kind1 = FaceKind::Triangle;
    FaceKind kind2 = FaceKind::Triangle;

    int shear1() const { return shear_r(kind1); }
    int shear2() const { return shear_r(kind2); }

    Rat beta0() const { return b(Rat(0)) / a(Rat(0)); }
    Rat gamma0() const { return c(Rat(0)) / a(Rat(0)); }
    Rat beta_at(const Rat& u) const { return b(u) / a(u); }
    Rat gamma_at(const Rat& u) const { return c(u) / a(u); }
    // quotient-rule derivatives of beta, gamma at u = 0
    Rat beta_prime0() const;
    Rat gamma_prime0() const;
};

// Scales (a,b,c) to coprime integer coefficients with a(0) > 0.
EdgeGluing normalized(EdgeGluing g);

// Data invariants for one edge: coprimality, a nonvanishing on [0,1],
// gamma < 0 on [0,1]. Empty result means the data is admissible.
std::optional<std::string> gluing_data_defect(const EdgeGluing& g);

// Frame changes. Swapping sides exchanges the roles of the charts; swapping
// ends re-parametrizes u -> 1-u on both charts (the triangle charts shear,
// which is where the r-terms come from).
EdgeGluing side_swapped(const EdgeGluing& g);
EdgeGluing end_swapped(const EdgeGluing& g);

// A frame of an interior edge: which side is chart 1 (named by its face and
// local edge) and which end of that local edge carries u = 0.
struct EdgeFrame {
    int face = 0;
    int edge = 0;
    int originEnd = 0; // 0: u=0 at local vertex `edge`, 1: at the next vertex
    bool operator==(const EdgeFrame& o) const {
        return face == o.face && edge == o.edge && originEnd == o.originEnd;
    }
};

// Canonical frame of gluing gi: side 1 is the lexicographically smaller
// (face, edge) side; u = 0 sits at the endpoint with smaller local vertex
// index on that side.
EdgeFrame canonical_frame(const Surface& s, int gi);

// Re-expresses data given in frame `from` in frame `to` (both frames of
// gluing gi). Throws Error("MissingGluing") if a frame does not name a side
// of the gluing.
EdgeGluing reframe(const Surface& s, int gi, EdgeGluing g, const EdgeFrame& from,
                   const EdgeFrame& to);

// Transition data for every gluing of a surface, stored in canonical frames.
struct SurfaceData {
    std::vector<EdgeGluing> edges;
};

// Wraps raw (a,b,c) triples (one per gluing, canonical frames) and fills in
// the face kinds. Throws Error("MissingGluing") on a count mismatch.
SurfaceData make_data(const Surface& s, std::vector<EdgeGluing> edges);

EdgeGluing edge_in_frame(const Surface& s, const SurfaceData& d, int gi, const EdgeFrame& f);

// One step of a vertex walk: the face the step starts in and the edge it
// crosses, with that edge's data in the frame (side 1 = this face, u = 0 at
// the vertex).
struct VertexStep {
    Slot corner;       // this face's corner at the vertex
    int gluing = -1;   // crossed edge
    EdgeFrame frame;
    Rat beta0, gamma0, betaPrime0, gammaPrime0;
    bool joining = false; // beta0 == 0
};

// The ordered star of a vertex orbit. Interior orbits give a closed cycle
// (steps.size() == corners.size()); boundary orbits a path from one boundary
// edge to the other (one step fewer than corners). Throws
// Error("ValidationFailed") if the star is not a single disk fan.
struct VertexStar {
    int orbit = 0;
    bool interior = false;
    std::vector<Slot> corners;
    std::vector<VertexStep> steps;

    int valency() const { return static_cast<int>(corners.size()); }
};
VertexStar vertex_star(const Surface& s, const SurfaceData& d, int orbit);

// Per-vertex admissibility. For interior vertices: the first-jet cycle must
// close and the tangent sectors must tile once (non-positive entry on each
// row and the diagonal of every proper partial product). For boundary
// vertices: every partial product must satisfy the sector condition and the
// full chain must not complete a turn. Crossing vertices (valency 4, all
// four edges joining) additionally need the mixed-derivative balances H1, H2
// to vanish.
struct VertexReport {
    int orbit = 0;
    std::string label;
    bool interior = false;
    int valency = 0;
    bool dataUsable = true; // all touching edges had admissible data
    bool cycleClosed = true;
    bool sectorsOK = true;
    bool crossing = false;
    bool crossingOK = true;
    std::optional<std::pair<Rat, Rat>> crossingDefect; // (H1, H2) when crossing
    bool ok() const {
        return dataUsable && cycleClosed && sectorsOK && (!crossing || crossingOK);
    }
};
VertexReport check_vertex(const Surface& s, const SurfaceData& d, int orbit);

// The crossing balance pair (H1, H2) at an interior crossing vertex; the
// vertex passes iff both vanish. Throws Error("NotInterior") for boundary
// orbits and Error("NotCrossing") when the vertex is not a crossing.
std::pair<Rat, Rat> crossing_defect(const Surface& s, const SurfaceData& d, int orbit);

struct ValidationReport {
    bool ok = true;
    std::vector<std::pair<int, std::string>> edgeDefects; // (gluing, reason)
    std::vector<VertexReport> vertices;                   // one per orbit
    int crossingCount = 0;
};
ValidationReport validate_g1(const Surface& s, const SurfaceData& d);

} // namespace g1
