#pragma once

#include "g1surf/bbform.hpp"
#include "g1surf/gluing.hpp"
#include "g1surf/syzygy.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g1 {

// ---------------------------------------------------------------- edge data

// First-order data of a spline along an interior edge, in a fixed frame: the
// side charts restrict to g1 = h0 + v1 h1 and g2 = h0 + v2 h2 modulo (v1^2,
// v2^2), tied to the transition data by the identity a h1 - b h0' - c h2 = 0.
struct EdgeSpline {
    UniPoly h0, h1, h2;
};

// Admissibility of e against g at degree k: the identity above plus the
// degree caps deg h0 <= k, deg h_i <= k - 1 + (twist of side i). Empty
// result means admissible, otherwise a short description of the failure.
std::optional<std::string> edge_spline_defect(const EdgeSpline& e, const EdgeGluing& g, int k);

// dim of the degree-k edge-data space: the syzygy dimension plus one (the
// constants); equals 2k - delta(E) + r1 + r2 + 1 once k >= d2.
int edge_space_dim(const EdgeGluing& g, int k);

// (A,B,C) with aA + bB + cC = 0 corresponds to (h0, h1, h2) =
// (c0 + int_0^u B, -A, C); the inverse forgets the constant.
EdgeSpline syzygy_to_edge_spline(const Syzygy& z, const Rat& c0);
Syzygy edge_spline_to_syzygy(const EdgeSpline& e);

// ------------------------------------------------------------------- jets

using Jet11 = Jet;

// 1,1-jets of an edge spline at both ends on both side charts. At u = 0 the
// charts are the frame's own; at u = 1 they are the end-local ones (edge
// parameter and transversals emanating from the far vertex), which is where
// the reversal shear of a triangle side enters.
struct EdgeJets {
    Jet11 side1At0, side2At0;
    Jet11 side1At1, side2At1;
};
EdgeJets w_jets(const EdgeSpline& e, const EdgeGluing& g);

// Dimension of the end-jet image of the edge-data space at one end, for k
// past the separating degree: 4 when the edge is joining there, else 5.
int im_w_dim(const EdgeGluing& g, int end);

// Actual rank of the end-jet functionals on the degree-k edge-data space;
// one end contributes 6 coordinates (h0, h0', h_i, h_i' at the end), both
// ends 12. The deficit against im_w_dim closes exactly at the complete
// separation degree.
int w_rank_at(const EdgeGluing& g, int end, int k);
int w_rank(const EdgeGluing& g, int k);

// Dimension of the space of spline 1,1-jets around a vertex: one value, one
// derivative per star edge and one mixed derivative per sector, subject to
// the chart-change relations across each interior edge (the mixed relation
// is active exactly at the joining ones). Interior orbits follow
// 3 + n - sum(e_perp) + e_plus, boundary orbits drop the boundary rays from
// the relation count.
int vertex_freedom_dim(const VertexStar& star);
int vertex_freedom_dim(const Surface& s, const SurfaceData& d, int orbit);

// A point of the vertex jet space: the common value, one derivative per star
// ray (interior orbits: one ray per step, in walk order; boundary orbits: the
// entry boundary edge, the step edges, then the exit boundary edge) and one
// mixed derivative per sector.
struct VertexJets {
    Rat c;
    std::vector<Rat> p, m;
};

// Canonical generators of the vertex jet space: the value generator, two
// gradient generators dual to the first sector's exit and entry rays, and
// one mixed generator per linked group of sectors with a free mixed chain.
// Gradient mixed parts equalize the two sectors flanking the dual ray when
// possible, otherwise they start from zero at the group's first sector.
std::vector<VertexJets> vertex_jet_generators(const VertexStar& star);

// ---------------------------------------------------------------- splines

// A piecewise polynomial on a surface: one degree-k coefficient form per
// face, in surface order.
struct Spline {
    int k = 0;
    std::vector<BBForm> faces;
};
Spline zero_spline(const Surface& s, int k);

// The edge data of a spline along gluing gi in frame `f` (canonical frame
// by default): h0 the common restriction, h1/h2 the frame transversal
// derivatives of the two sides.
EdgeSpline spline_edge_data(const Surface& s, const Spline& sp, int gi);
EdgeSpline spline_edge_data(const Surface& s, const Spline& sp, int gi, const EdgeFrame& f);

// 1,1-jets of a spline on both sides of a vertex-walk step, in the step's
// chart (u along the crossed edge from the vertex, v along the respective
// sector's other edge).
std::pair<Jet11, Jet11> step_jets(const Surface& s, const Spline& sp, const VertexStep& st);

// Exact smoothness check. Shape or degree mismatches against the surface
// throw Error("DegreeMismatch"); everything else lands in the report: per
// gluing the restriction mismatch and the identity residual, both zero iff
// the spline is smooth across that edge.
struct EdgeResidual {
    int gluing = -1;
    UniPoly c0; // side-1 minus side-2 restriction
    UniPoly g1; // a h1 - b h0' - c h2
    bool ok() const { return c0.is_zero() && g1.is_zero(); }
};
struct VerifyReport {
    bool ok = true;
    std::vector<EdgeResidual> edges;
};
VerifyReport verify_spline(const Surface& s, const SurfaceData& d, const Spline& sp);

// ------------------------------------------------------------- dimension

// Closed-form dimension count. `value` is reliable once `valid` is set,
// i.e. k >= 4 and k at or past every interior edge's complete separation
// degree (exactThreshold); boundThreshold is the same gate computed from
// the a-priori degree bounds. Orientable surfaces also get the equivalent
// Euler-characteristic form as a cross-check. For k >= 2 below the
// threshold the value is still a lower bound. A half-integral count (data
// inconsistent with the formula's assumptions) throws
// Error("HalfIntegerResult").
struct DimensionResult {
    long long value = 0;
    bool valid = false;
    int exactThreshold = 0;
    int boundThreshold = 0;
    std::optional<long long> genusForm;
};
DimensionResult dimension_formula(const Surface& s, const SurfaceData& d, int k);

// Brute-force dimension: solve the C0 + smoothness constraints on all
// coefficient unknowns exactly and count the kernel. Independent of the
// formula path end to end.
int dimension_oracle(const Surface& s, const SurfaceData& d, int k);

// Basis of the full smooth space straight from the oracle's kernel.
std::vector<Spline> oracle_kernel(const Surface& s, const SurfaceData& d, int k);

// ---------------------------------------------------------- basis classes

// Vertex class: splines realizing a basis of the vertex's jet space, each
// thoroughly vanishing away from the star. Throws Error("DegreeTooLow")
// when k cannot realize the jets (the caller falls back to the oracle).
std::vector<Spline> vertex_basis_splines(const Surface& s, const SurfaceData& d, int orbit,
                                         int k);

// Interior-edge class: the thoroughly-bi-vanishing edge data, lifted onto
// the two incident faces with zeros elsewhere.
std::vector<Spline> edge_basis_splines(const Surface& s, const SurfaceData& d, int gi, int k);

// Boundary-edge class: pairs (h0, h1) with vanishing end jets, lifted onto
// the single incident face. Keyed by the face-local unglued edge.
std::vector<Spline> boundary_edge_basis_splines(const Surface& s, int face, int edge, int k);

// Face class: one spline per interior coefficient (all edge rows zero).
std::vector<Spline> face_basis_splines(const Surface& s, int face, int k);

enum class BasisClass { Vertex, InteriorEdge, BoundaryEdge, Face };

struct BasisMember {
    Spline spline;
    BasisClass cls = BasisClass::Vertex;
    int anchor = -1; // vertex orbit / gluing index / face index
    int anchorEdge = -1; // boundary class only: local edge on the face
    bool supplemented = false;
};

// Union of the four classes, checked for exact independence and reconciled
// against the oracle dimension. Below the threshold the construction can
// fall short: skipped vertices (local solve infeasible) are listed, the gap
// is filled from the oracle kernel (`supplemented`, attributed by their
// jets), and per-edge end-jet rank deficits are reported.
struct BasisCatalog {
    int k = 0;
    std::vector<BasisMember> members;
    int oracleDim = 0;
    bool constructive = true; // no skips, no supplements
    std::vector<int> skippedVertices;
    std::vector<std::pair<int, int>> edgeDeficits; // (gluing, deficit), nonzero only

    int count(BasisClass c) const;
};
BasisCatalog assemble_basis(const Surface& s, const SurfaceData& d, int k);

// ------------------------------------------------------------ realization

// Evaluates a coordinate triple of splines on a per-face parameter grid
// (samplesPerEdge + 1 points per direction, triangular on triangles).
// Seam vertices are emitted once per incident face; smooth coordinates make
// the copies coincide. patchFaceRanges[f] is the [begin, end) range of
// output faces sampled from input face f. Throws Error("DegreeMismatch")
// when the three splines do not share the surface's shape and one degree.
struct RealizedMesh {
    std::vector<std::array<double, 3>> positions;
    std::vector<std::vector<int>> faces;
    std::vector<std::pair<int, int>> patchFaceRanges;
};
RealizedMesh realize(const Surface& s, const Spline& x, const Spline& y, const Spline& z,
                     int samplesPerEdge);

} // namespace g1
