#pragma once

#include "g1surf/gluing.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g1 {

// End values of the gluing data on the edges around one vertex, listed in
// walk order. Each entry is read in the frame with u = 0 at the vertex and
// side 1 = the face the walk leaves through that edge.
struct VertexEnd {
    Rat beta, gamma;
    std::optional<Rat> betaPrime; // prescribed first derivative, if any
};
struct VertexDesign {
    std::vector<VertexEnd> ends;
};

// Left product of the first-jet step matrices [[0,1],[gamma,beta]]; a usable
// interior design must multiply to the identity.
bool vertex_cycle_closes(const VertexDesign& d);

// Symmetric vertex data (2cos(2pi/n), -1). Exact only for n in {3,4,6};
// other valencies throw Error("IrrationalValue").
std::pair<Rat, Rat> hahn_vertex_data(int n);

// Solves the closure relations for an interior vertex with all gamma = -1.
// n=3 admits only beta = -1 (no free parameters). For n in {4,5,6} pass the
// leading n-2 beta values; the remaining ones are determined, and an
// incompatible choice throws Error("InfeasibleParams").
VertexDesign solve_unit_gamma_vertex(int n, const std::vector<Rat>& betas);

// Vertex data from an explicit fan of sector-boundary vectors v_1..v_n: each
// consecutive relation v_{k-1} = beta v_k + gamma v_{k+1} is solved for
// (beta, gamma). Throws Error("InfeasibleParams") when consecutive vectors
// are dependent or some gamma fails to be negative.
using Vec2 = std::array<Rat, 2>;
VertexDesign fan_from_vectors(const std::vector<Vec2>& vectors);

// Re-expresses a vertex-end value pair at the u = 1 end of an edge in the
// edge frame: beta(1) = sh1 - sh2*gamma - beta, gamma(1) = gamma. Involution.
std::pair<Rat, Rat> far_end_values(const Rat& beta, const Rat& gamma, int sh1, int sh2);

// End conditions for one edge, framed to the edge coordinate (far-vertex
// values go through far_end_values first; a far derivative must likewise be
// the edge-frame beta'(1)).
struct EdgeEnd {
    Rat beta, gamma;
    std::optional<Rat> betaPrime;
};

// Interpolation shape of the beta numerator. Linear/Quadratic/Cubic keep a
// constant denominator (gamma interpolated linearly); FractionalLinear
// solves for a shared linear denominator, which a prescribed derivative
// pins down. Underdetermined systems drop the highest coefficients;
// inconsistent ones or inadmissible results throw
// Error("InfeasibleInterpolation").
enum class InterpPolicy { Linear, FractionalLinear, Quadratic, Cubic };

EdgeGluing interpolate_edge(const EdgeEnd& end0, const EdgeEnd& end1, FaceKind kind1,
                            FaceKind kind2, InterpPolicy policy);

// One edge of a crossing rim, oriented along the rim (u = 0 at the vertex
// shared with the previous edge), with its denominator pair fixed so that
// gamma = c/a = -1.
struct EquatorEdge {
    UniPoly a, c;
    int sh1 = 1, sh2 = 1;
};

// Quadratic-numerator completion of the beta data along a crossing equator:
// seed h'(0) on the first edge, propagate through quadratic interpolation
// and the mixed-derivative balance at each crossing vertex, and close the
// loop. A degenerate closure equation leaves the seed free (the first
// numerator is then made linear); an inconsistent one switches the last
// edge to a cubic numerator.
struct EquatorPlan {
    std::vector<EquatorEdge> edges;
    Rat seed;
    bool seedFree = false;
    bool cubicFallback = false;
    std::vector<UniPoly> numerators;
};
EquatorPlan solve_unit_gamma_equator(std::vector<EquatorEdge> cycle);

// Gluing data induced by parametric continuity of two plane charts that
// share an edge (side 2's coordinates given in side 1's plane, i.e. any deck
// translation already applied). Corner lists follow face order; a rectangle
// must be a parallelogram up to the bilinear term staying polynomial.
// edge1/originEnd fix the edge frame exactly as in EdgeFrame.
EdgeGluing parametric_gluing(const std::vector<Vec2>& side1, FaceKind kind1, int edge1,
                             int originEnd, const std::vector<Vec2>& side2, FaceKind kind2,
                             int edge2, bool reversed);

// The gluing joining the two labeled vertices; Error("MissingGluing") if no
// interior edge has those endpoint labels.
int find_gluing(const Surface& s, const std::string& a, const std::string& b);

// Gluing data for a whole surface from one plane chart per face, all drawn in
// a common plane so glued edges coincide pointwise (planar meshes).
SurfaceData parametric_data(const Surface& s, const std::vector<std::vector<Vec2>>& coords);

struct BuiltinSurface {
    Surface surface;
    SurfaceData data;
};

// Built-in surfaces with exact published gluing data. Names:
//   pruned-octahedron, pruned-octahedron-alt, octahedron, cube, tetrahedron,
//   torus-two-triangles, planar-triangulated-square.
// Every built-in passes validate_g1. Throws Error("UnknownName") otherwise.
BuiltinSurface builtin_surface(const std::string& name);
std::vector<std::string> builtin_names();

// Four triangles around a crossing vertex whose data deliberately breaks the
// mixed-derivative balance: validation fails with defect (H1, H2) = (-1/2, -1/2).
BuiltinSurface contra_crossing_fixture();

} // namespace g1
