#pragma once

#include "g1surf/gluing.hpp"
#include "g1surf/unipoly.hpp"

#include <vector>

namespace g1 {

// Twisted-grading weight: a rectangle side admits one extra degree in its
// transversal coefficient (bidegree (k,k) vs total degree k). Distinct from
// the reversal shear_r.
inline int twist_r(FaceKind kind) { return kind == FaceKind::Rectangle ? 1 : 0; }

// A relation aA + bB + cC = 0 between the gluing weights. The components
// correspond to edge splines via h1 = -A, h0' = B, h2 = C.
struct Syzygy {
    UniPoly A, B, C;
    bool is_zero() const { return A.degree() < 0 && B.degree() < 0 && C.degree() < 0; }
};

// Least k admitting z under the grading deg A <= k-1+tw1, deg B <= k-1,
// deg C <= k-1+tw2. Zero syzygy reports 0.
int twisted_degree(const Syzygy& z, int tw1, int tw2);

// Minimal free generators of the syzygy module, ordered d1 <= d2.
struct MuBasis {
    Syzygy Z1, Z2;
    int d1 = 0, d2 = 0;
    int tw1 = 0, tw2 = 0;
    Rat h0; // Z1 x Z2 = h0 * (a, b, c), h0 a nonzero constant
};

// Generator extraction by exact kernel solves per twisted degree. Canonical
// output: generators are reduced against u^j-multiples of earlier ones and
// scaled so the lowest nonzero coefficient of B (else of A, else of C) is 1.
MuBasis mu_basis_raw(const UniPoly& a, const UniPoly& b, const UniPoly& c, int tw1, int tw2);
MuBasis mu_basis(const EdgeGluing& g);

// dim Z_k from the twisted degrees of the generators.
int syzygy_space_dim(const MuBasis& m, int k);

// Basis of Z_k: u^j Z1 (j <= k-d1) then u^j Z2 (j <= k-d2).
std::vector<Syzygy> syzygy_space_basis(const MuBasis& m, int k);

// Exact kernel dimension at twisted degree k computed directly from (a,b,c),
// independent of any mu-basis.
int syzygy_kernel_dim(const UniPoly& a, const UniPoly& b, const UniPoly& c, int tw1, int tw2,
                      int k);

// delta(E) = max(tw1 + deg a, deg b, tw2 + deg c).
int edge_delta(const EdgeGluing& g);

struct EdgeReport {
    int delta = 0;
    int d1 = 0, d2 = 0;
    bool joining0 = false, joining1 = false;
    // minimal max-component degree of a syzygy whose edge spline takes
    // different values at the two end-vertices (integral of B nonzero)
    int separatingDegree = 0;
    // same units; additionally the spline has a constant nonzero jet at one
    // end and value and jet vanish at the other (best over both ends)
    int offsetDegree = 0;
    // minimal spline degree k whose end-jet map on M^1_k reaches the full
    // image dim im W0 + dim im W1
    int completeSeparationDegree = 0;
    // upper bounds from the degree lemmas, in spline-degree units
    int separatingBound = 0;        // max(2 d1 - 1, d2)
    int offsetBound = 0;            // max(2 d1 + 3, d2 + 4)
    int completeSeparationBound = 0; // max(2 d1 + 3, d2 + 4)
};

EdgeReport separation_profile(const EdgeGluing& g);

} // namespace g1
