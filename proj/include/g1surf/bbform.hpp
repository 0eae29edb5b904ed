#pragma once

#include "g1surf/bipoly.hpp"

#include <vector>

namespace g1 {

enum class FaceKind { Triangle, Rectangle };

inline int nverts(FaceKind kind) { return kind == FaceKind::Triangle ? 3 : 4; }

// r-invariant of a chart transversal to an edge: triangles contribute 1,
// rectangles 0 (the transversal coordinate degree drop).
// reversal shear: a triangle edge chart shears under orientation flip, a rectangle chart does not
inline int shear_r(FaceKind kind) { return kind == FaceKind::Triangle ? 1 : 0; }

int coeff_count(FaceKind kind, int k);

// Flat coefficient index. Triangle: exponents u^i v^j w^(k-i-j), rows by j.
// Rectangle: tensor index (i,j), rows by j.
int coeff_index(FaceKind kind, int k, int i, int j);

// Bernstein-Bezier form of one polynomial face patch of degree k.
struct BBForm {
    FaceKind kind = FaceKind::Triangle;
    int k = 0;
    std::vector<Rat> c;

    static BBForm zero(FaceKind kind, int k);
    Rat& at(int i, int j) { return c[coeff_index(kind, k, i, j)]; }
    const Rat& at(int i, int j) const { return c[coeff_index(kind, k, i, j)]; }
};

BBForm to_bb(const BiPoly& g, FaceKind kind, int k); // Error("DegreeOverflow") if it does not fit
BiPoly from_bb(const BBForm& b);
BBForm elevate(const BBForm& b); // degree k+1, same polynomial

// Coefficient positions seen from local edge `edge`, walked from its start
// vertex to its end vertex (reversed when fromStart is false). `on` lies on
// the edge (k+1 entries); `inner` is the first layer inward (k entries for a
// triangle, k+1 for a rectangle), aligned with `on`.
struct EdgeRows {
    std::vector<int> on;
    std::vector<int> inner;
};
EdgeRows edge_rows(FaceKind kind, int k, int edge, bool fromStart);

// Restriction to the edge and outgoing transversal derivative along it, as
// polynomials in the edge parameter.
UniPoly edge_restriction(const BBForm& b, int edge, bool fromStart);
UniPoly edge_transversal(const BBForm& b, int edge, bool fromStart);

// Corner 1-jet (value, first derivatives, mixed second derivative) in the
// corner chart: u along the leaving edge `corner` -> `corner+1`, v along the
// arriving edge `corner` -> `corner-1`.
struct Jet {
    Rat c00, c10, c01, c11;
    bool operator==(const Jet& o) const {
        return c00 == o.c00 && c10 == o.c10 && c01 == o.c01 && c11 == o.c11;
    }
    bool is_zero() const { return c00 == 0 && c10 == 0 && c01 == 0 && c11 == 0; }
};
Jet corner_jet(const BBForm& b, int corner);

} // namespace g1
