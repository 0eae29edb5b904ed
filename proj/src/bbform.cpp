#include "g1surf/bbform.hpp"

#include "g1surf/errors.hpp"

#include <algorithm>

namespace g1 {

int coeff_count(FaceKind kind, int k) {
    return kind == FaceKind::Triangle ? (k + 1) * (k + 2) / 2 : (k + 1) * (k + 1);
}

int coeff_index(FaceKind kind, int k, int i, int j) {
    if (kind == FaceKind::Rectangle) return j * (k + 1) + i;
    // Triangle rows j = 0..k of length k-j+1.
    return j * (k + 1) - j * (j - 1) / 2 + i;
}

BBForm BBForm::zero(FaceKind kind, int k) {
    return BBForm{kind, k, std::vector<Rat>(coeff_count(kind, k), Rat(0))};
}

namespace {

Rat trinom(int k, int i, int j) { return binom(k, i) * binom(k - i, j); }

} // namespace

BBForm to_bb(const BiPoly& g, FaceKind kind, int k) {
    if (kind == FaceKind::Triangle && g.total_degree() > k)
        fail("DegreeOverflow", "total degree exceeds patch degree");
    if (kind == FaceKind::Rectangle && (g.deg_u() > k || g.deg_v() > k))
        fail("DegreeOverflow", "per-axis degree exceeds patch degree");
    BBForm b = BBForm::zero(kind, k);
    if (kind == FaceKind::Rectangle) {
        // Tensor conversion: Bernstein along u per v-power row, then along v.
        std::vector<std::vector<Rat>> mid(g.deg_v() + 1);
        for (int q = 0; q <= g.deg_v(); ++q) {
            std::vector<Rat> row(g.deg_u() + 1, Rat(0));
            for (int p = 0; p <= g.deg_u(); ++p) row[p] = g.coeff(p, q);
            mid[q] = bernstein_coeffs(UniPoly(std::move(row)), k);
        }
        for (int i = 0; i <= k; ++i) {
            std::vector<Rat> col(std::max(g.deg_v() + 1, 1), Rat(0));
            for (int q = 0; q <= g.deg_v(); ++q) col[q] = mid[q][i];
            auto bb = bernstein_coeffs(UniPoly(std::move(col)), k);
            for (int j = 0; j <= k; ++j) b.at(i, j) = bb[j];
        }
        return b;
    }
    // Triangle: c(i,j) = sum_{p<=i, q<=j} C(i,p) C(j,q) / (k; p, q) a(p,q).
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i + j <= k; ++i) {
            Rat acc(0);
            for (int q = 0; q <= std::min(j, g.deg_v()); ++q)
                for (int p = 0; p <= std::min(i, g.deg_u()); ++p) {
                    Rat a = g.coeff(p, q);
                    if (a == 0) continue;
                    acc += binom(i, p) * binom(j, q) / trinom(k, p, q) * a;
                }
            b.at(i, j) = acc;
        }
    return b;
}

BiPoly from_bb(const BBForm& b) {
    int k = b.k;
    if (b.kind == FaceKind::Rectangle) {
        BiPoly g;
        for (int j = 0; j <= k; ++j) {
            std::vector<Rat> row(k + 1);
            for (int i = 0; i <= k; ++i) row[i] = b.at(i, j);
            UniPoly pu = from_bernstein(row);
            // Multiply by B^k_j(v).
            std::vector<Rat> unit(k + 1, Rat(0));
            unit[j] = 1;
            g = g + BiPoly::in_u(pu) * BiPoly::in_v(from_bernstein(unit));
        }
        return g;
    }
    // Triangle: expand (1-u-v)^m per coefficient.
    BiPoly one_minus = BiPoly(Rat(1)) - BiPoly::u() - BiPoly::v();
    std::vector<BiPoly> wpow(k + 1);
    wpow[0] = BiPoly(Rat(1));
    for (int m = 1; m <= k; ++m) wpow[m] = wpow[m - 1] * one_minus;
    BiPoly g;
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i + j <= k; ++i) {
            const Rat& cij = b.at(i, j);
            if (cij == 0) continue;
            BiPoly mono = BiPoly::in_u(UniPoly::monomial(i, Rat(1))) *
                          BiPoly::in_v(UniPoly::monomial(j, cij * trinom(k, i, j)));
            g = g + mono * wpow[k - i - j];
        }
    return g;
}

BBForm elevate(const BBForm& b) { return to_bb(from_bb(b), b.kind, b.k + 1); }

EdgeRows edge_rows(FaceKind kind, int k, int edge, bool fromStart) {
    EdgeRows rows;
    auto push = [&](int i, int j, bool on) {
        (on ? rows.on : rows.inner).push_back(coeff_index(kind, k, i, j));
    };
    if (kind == FaceKind::Triangle) {
        if (edge < 0 || edge > 2) fail("InvalidCorner", "triangle edge out of range");
        for (int t = 0; t <= k; ++t) {
            if (edge == 0) push(t, 0, true);
            if (edge == 1) push(k - t, t, true);
            if (edge == 2) push(0, k - t, true);
        }
        for (int t = 0; t < k; ++t) {
            if (edge == 0) push(t, 1, false);
            if (edge == 1) push(k - 1 - t, t, false);
            if (edge == 2) push(1, k - 1 - t, false);
        }
    } else {
        if (edge < 0 || edge > 3) fail("InvalidCorner", "rectangle edge out of range");
        for (int t = 0; t <= k; ++t) {
            switch (edge) {
            case 0: push(t, 0, true); push(t, 1, false); break;
            case 1: push(k, t, true); push(k - 1, t, false); break;
            case 2: push(k - t, k, true); push(k - t, k - 1, false); break;
            default: push(0, k - t, true); push(1, k - t, false); break;
            }
        }
    }
    if (!fromStart) {
        std::reverse(rows.on.begin(), rows.on.end());
        std::reverse(rows.inner.begin(), rows.inner.end());
    }
    return rows;
}

UniPoly edge_restriction(const BBForm& b, int edge, bool fromStart) {
    auto rows = edge_rows(b.kind, b.k, edge, fromStart);
    std::vector<Rat> vals;
    vals.reserve(rows.on.size());
    for (int idx : rows.on) vals.push_back(b.c[idx]);
    return from_bernstein(vals);
}

UniPoly edge_transversal(const BBForm& b, int edge, bool fromStart) {
    auto rows = edge_rows(b.kind, b.k, edge, fromStart);
    std::vector<Rat> vals;
    vals.reserve(rows.inner.size());
    for (std::size_t t = 0; t < rows.inner.size(); ++t)
        vals.push_back(Rat(b.k) * (b.c[rows.inner[t]] - b.c[rows.on[t]]));
    return from_bernstein(vals);
}

Jet corner_jet(const BBForm& b, int corner) {
    if (corner < 0 || corner >= nverts(b.kind))
        fail("InvalidCorner", "corner index out of range");
    auto rows = edge_rows(b.kind, b.k, corner, true);
    Rat kk(b.k);
    Rat mixed = b.kind == FaceKind::Triangle ? Rat(b.k) * Rat(b.k - 1) : Rat(b.k) * Rat(b.k);
    const Rat& c0 = b.c[rows.on[0]];
    const Rat& c1 = b.c[rows.on[1]];
    const Rat& c2 = b.c[rows.inner[0]];
    const Rat& c3 = b.c[rows.inner[1]];
    return Jet{c0, kk * (c1 - c0), kk * (c2 - c0), mixed * (c3 - c2 - c1 + c0)};
}

} // namespace g1
