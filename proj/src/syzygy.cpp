#include "g1surf/syzygy.hpp"

#include "g1surf/errors.hpp"
#include "g1surf/linalg.hpp"

#include <algorithm>
#include <array>

namespace g1 {

int twisted_degree(const Syzygy& z, int tw1, int tw2) {
    int k = std::max({z.A.degree() + 1 - tw1, z.B.degree() + 1, z.C.degree() + 1 - tw2, 0});
    return k;
}

namespace {

// Coefficient layout of a syzygy candidate at twisted degree k:
// A coefficients (k+tw1 of them), then B (k), then C (k+tw2), each ascending.
struct Layout {
    int nA, nB, nC;
    Layout(int k, int tw1, int tw2) : nA(k + tw1), nB(k), nC(k + tw2) {}
    int total() const { return nA + nB + nC; }
    Syzygy unpack(const QVec& v) const {
        Syzygy z;
        z.A = UniPoly(std::vector<Rat>(v.begin(), v.begin() + nA));
        z.B = UniPoly(std::vector<Rat>(v.begin() + nA, v.begin() + nA + nB));
        z.C = UniPoly(std::vector<Rat>(v.begin() + nA + nB, v.end()));
        return z;
    }
    QVec pack(const Syzygy& z) const {
        QVec v(total(), Rat(0));
        for (int i = 0; i <= z.A.degree(); ++i) v[i] = z.A.coeff(i);
        for (int i = 0; i <= z.B.degree(); ++i) v[nA + i] = z.B.coeff(i);
        for (int i = 0; i <= z.C.degree(); ++i) v[nA + nB + i] = z.C.coeff(i);
        return v;
    }
};

// Rows of the linear system "aA + bB + cC = 0" over the layout's unknowns.
std::vector<QVec> identity_rows(const UniPoly& a, const UniPoly& b, const UniPoly& c,
                                const Layout& L) {
    int dmax = std::max({a.degree() + L.nA - 1, b.degree() + L.nB - 1, c.degree() + L.nC - 1, -1});
    std::vector<QVec> rows;
    for (int t = 0; t <= dmax; ++t) {
        QVec row(L.total(), Rat(0));
        for (int j = 0; j < L.nA; ++j)
            if (t - j >= 0 && t - j <= a.degree()) row[j] = a.coeff(t - j);
        for (int j = 0; j < L.nB; ++j)
            if (t - j >= 0 && t - j <= b.degree()) row[L.nA + j] = b.coeff(t - j);
        for (int j = 0; j < L.nC; ++j)
            if (t - j >= 0 && t - j <= c.degree()) row[L.nA + L.nB + j] = c.coeff(t - j);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<QVec> kernel_basis(const UniPoly& a, const UniPoly& b, const UniPoly& c,
                               const Layout& L) {
    if (L.total() == 0) return {};
    return solve_linear(identity_rows(a, b, c, L), {}, L.total()).nullspace;
}

int first_nonzero(const QVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

Syzygy scale_normalized(Syzygy z) {
    Rat s(0);
    for (const UniPoly* p : {&z.B, &z.A, &z.C}) {
        for (int i = 0; i <= p->degree(); ++i)
            if (p->coeff(i) != 0) {
                s = p->coeff(i);
                break;
            }
        if (s != 0) break;
    }
    if (s == 0 || s == 1) return z;
    Rat inv = Rat(1) / s;
    z.A = z.A * inv;
    z.B = z.B * inv;
    z.C = z.C * inv;
    return z;
}

UniPoly gcd3(const UniPoly& a, const UniPoly& b, const UniPoly& c) {
    return gcd(gcd(a, b), c);
}

} // namespace

MuBasis mu_basis_raw(const UniPoly& a, const UniPoly& b, const UniPoly& c, int tw1, int tw2) {
    if (a.degree() < 0 && b.degree() < 0 && c.degree() < 0)
        fail("NotCoprime", "zero triple has no syzygy module");
    if (gcd3(a, b, c).degree() > 0)
        fail("NotCoprime", "gluing weights share a nonconstant factor");

    int cap = std::max({tw1 + a.degree(), b.degree(), tw2 + c.degree()}) + 2 - tw1 - tw2;
    cap = std::max(cap, 1) + 2;

    std::vector<Syzygy> gens;
    std::vector<int> degs;
    for (int k = 0; k <= cap && gens.size() < 2; ++k) {
        Layout L(k, tw1, tw2);
        std::vector<QVec> kernel = kernel_basis(a, b, c, L);
        int expected = 0;
        for (int d : degs) expected += std::max(0, k - d + 1);
        if (static_cast<int>(kernel.size()) == expected) continue;

        std::vector<QVec> multiples;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (int j = 0; j <= k - degs[i]; ++j) {
                Syzygy sh{gens[i].A.shifted(j), gens[i].B.shifted(j), gens[i].C.shifted(j)};
                multiples.push_back(L.pack(sh));
            }
        std::vector<QVec> oldRef = rref(multiples);
        std::vector<int> oldPivots;
        for (const QVec& r : oldRef) oldPivots.push_back(first_nonzero(r));

        std::vector<QVec> all = multiples;
        all.insert(all.end(), kernel.begin(), kernel.end());
        for (const QVec& row : rref(all)) {
            int p = first_nonzero(row);
            if (std::find(oldPivots.begin(), oldPivots.end(), p) != oldPivots.end()) continue;
            Syzygy z = scale_normalized(L.unpack(row));
            if (twisted_degree(z, tw1, tw2) != k)
                fail("InternalError", "extracted generator has wrong twisted degree");
            gens.push_back(std::move(z));
            degs.push_back(k);
        }
        if (static_cast<int>(gens.size()) > 2)
            fail("InternalError", "syzygy module yielded more than two generators");
    }
    if (gens.size() != 2) fail("InternalError", "syzygy module did not yield two generators");

    MuBasis m;
    m.Z1 = gens[0];
    m.Z2 = gens[1];
    m.d1 = degs[0];
    m.d2 = degs[1];
    m.tw1 = tw1;
    m.tw2 = tw2;

    int sum = std::max({tw1 + a.degree(), b.degree(), tw2 + c.degree()}) + 2 - tw1 - tw2;
    if (m.d1 + m.d2 != sum) fail("InternalError", "twisted degree sum violates the module bound");

    // leading terms at the respective twisted degrees must be independent
    auto lead = [&](const Syzygy& z, int d) {
        return std::array<Rat, 3>{z.A.coeff(d - 1 + tw1), z.B.coeff(d - 1), z.C.coeff(d - 1 + tw2)};
    };
    auto l1 = lead(m.Z1, m.d1), l2 = lead(m.Z2, m.d2);
    bool indep = l1[0] * l2[1] - l1[1] * l2[0] != 0 || l1[0] * l2[2] - l1[2] * l2[0] != 0 ||
                 l1[1] * l2[2] - l1[2] * l2[1] != 0;
    if (!indep) fail("InternalError", "generator leading terms are dependent");

    // outer product must reproduce (a, b, c) up to a nonzero constant
    UniPoly pa = m.Z1.B * m.Z2.C - m.Z2.B * m.Z1.C;
    UniPoly pb = m.Z1.C * m.Z2.A - m.Z2.C * m.Z1.A;
    UniPoly pc = m.Z1.A * m.Z2.B - m.Z2.A * m.Z1.B;
    const UniPoly* ref = a.degree() >= 0 ? &a : (b.degree() >= 0 ? &b : &c);
    const UniPoly* img = a.degree() >= 0 ? &pa : (b.degree() >= 0 ? &pb : &pc);
    if (img->degree() != ref->degree())
        fail("InternalError", "outer product does not match the gluing weights");
    Rat h0 = img->leading() / ref->leading();
    if (h0 == 0 || !(pa == a * h0) || !(pb == b * h0) || !(pc == c * h0))
        fail("InternalError", "outer product does not match the gluing weights");
    m.h0 = h0;
    return m;
}

MuBasis mu_basis(const EdgeGluing& g) {
    return mu_basis_raw(g.a, g.b, g.c, twist_r(g.kind1), twist_r(g.kind2));
}

int syzygy_space_dim(const MuBasis& m, int k) {
    if (k < m.d1) return 0;
    if (k < m.d2) return k - m.d1 + 1;
    return 2 * k - m.d1 - m.d2 + 2;
}

std::vector<Syzygy> syzygy_space_basis(const MuBasis& m, int k) {
    std::vector<Syzygy> out;
    for (int j = 0; j <= k - m.d1; ++j)
        out.push_back(Syzygy{m.Z1.A.shifted(j), m.Z1.B.shifted(j), m.Z1.C.shifted(j)});
    for (int j = 0; j <= k - m.d2; ++j)
        out.push_back(Syzygy{m.Z2.A.shifted(j), m.Z2.B.shifted(j), m.Z2.C.shifted(j)});
    return out;
}

int syzygy_kernel_dim(const UniPoly& a, const UniPoly& b, const UniPoly& c, int tw1, int tw2,
                      int k) {
    Layout L(k, tw1, tw2);
    if (L.total() == 0) return 0;
    return L.total() - rank_of(identity_rows(a, b, c, L));
}

int edge_delta(const EdgeGluing& g) {
    return std::max({twist_r(g.kind1) + g.a.degree(), g.b.degree(), twist_r(g.kind2) + g.c.degree()});
}

namespace {

// Search spaces where all three components have degree <= D (the reporting
// unit for separating/offset degrees).
std::vector<QVec> component_kernel(const UniPoly& a, const UniPoly& b, const UniPoly& c, int D,
                                   std::vector<QVec> extraRows = {}) {
    int n = 3 * (D + 1);
    Layout L(D + 1, 0, 0); // nA = nB = nC = D+1
    std::vector<QVec> rows = identity_rows(a, b, c, L);
    rows.insert(rows.end(), extraRows.begin(), extraRows.end());
    return solve_linear(rows, {}, n).nullspace;
}

Rat integral_B(const Layout& L, const QVec& v) {
    Syzygy z = L.unpack(v);
    return z.B.integral01();
}

int separating_component_degree(const UniPoly& a, const UniPoly& b, const UniPoly& c, int capD) {
    for (int D = 0; D <= capD; ++D) {
        Layout L(D + 1, 0, 0);
        for (const QVec& v : component_kernel(a, b, c, D))
            if (integral_B(L, v) != 0) return D;
    }
    fail("InternalError", "no separating syzygy within the degree bound");
}

// Offset conditions at a fixed orientation: zero jet of the syzygy at u=0,
// value and jet vanishing at u=1 (shear-corrected mixed terms).
int offset_component_degree(const EdgeGluing& g, int capD) {
    for (int D = 0; D <= capD; ++D) {
        Layout L(D + 1, 0, 0);
        int n = L.total();
        auto row = [&]() { return QVec(n, Rat(0)); };
        std::vector<QVec> cond;
        // A(0), A'(0), B(0), C(0), C'(0)
        for (int blk : {0, 2}) {
            int off = blk == 0 ? 0 : L.nA + L.nB;
            QVec r0 = row(), r1 = row();
            r0[off] = 1;
            if (D >= 1) r1[off + 1] = 1;
            cond.push_back(r0);
            if (D >= 1) cond.push_back(r1);
        }
        {
            QVec r = row();
            r[L.nA] = 1;
            cond.push_back(r);
        }
        // evaluations at 1
        auto eval1 = [&](int off) {
            QVec r = row();
            for (int j = 0; j <= D; ++j) r[off + j] = 1;
            return r;
        };
        auto deriv1 = [&](int off, const Rat& scale) {
            QVec r = row();
            for (int j = 1; j <= D; ++j) r[off + j] = Rat(j) * scale;
            return r;
        };
        cond.push_back(eval1(0));            // A(1)
        cond.push_back(eval1(L.nA));         // B(1)
        cond.push_back(eval1(L.nA + L.nB));  // C(1)
        // shear1*B'(1) + A'(1) and shear2*B'(1) - C'(1)
        {
            QVec r = deriv1(L.nA, Rat(g.shear1()));
            QVec rA = deriv1(0, Rat(1));
            for (int i = 0; i < n; ++i) r[i] += rA[i];
            cond.push_back(r);
            QVec s = deriv1(L.nA, Rat(g.shear2()));
            QVec sC = deriv1(L.nA + L.nB, Rat(-1));
            for (int i = 0; i < n; ++i) s[i] += sC[i];
            cond.push_back(s);
        }
        for (const QVec& v : component_kernel(g.a, g.b, g.c, D, cond))
            if (integral_B(L, v) != 0) return D;
    }
    return -1;
}

// Jet coordinates of the edge spline of a syzygy (constant term zero) at the
// two ends; the constant spline contributes (1,0,...) at both ends.
QVec stacked_jets(const EdgeGluing& g, const Syzygy& z, bool nearEnd, bool farEnd) {
    Rat s1(g.shear1()), s2(g.shear2());
    UniPoly Ad = z.A.derivative(), Bd = z.B.derivative(), Cd = z.C.derivative();
    QVec near{Rat(0), z.B(Rat(0)), z.A(Rat(0)), Ad(Rat(0)), z.C(Rat(0)), Cd(Rat(0))};
    QVec far{z.B.integral01(),
             z.B(Rat(1)),
             s1 * z.B(Rat(1)) + z.A(Rat(1)),
             s1 * Bd(Rat(1)) + Ad(Rat(1)),
             s2 * z.B(Rat(1)) - z.C(Rat(1)),
             s2 * Bd(Rat(1)) - Cd(Rat(1))};
    QVec out;
    if (nearEnd) out.insert(out.end(), near.begin(), near.end());
    if (farEnd) out.insert(out.end(), far.begin(), far.end());
    return out;
}

int jet_rank(const EdgeGluing& g, const MuBasis& m, int k, bool nearEnd, bool farEnd) {
    RankAccumulator acc;
    int width = (nearEnd ? 6 : 0) + (farEnd ? 6 : 0);
    QVec constant(width, Rat(0));
    constant[0] = 1;
    if (nearEnd && farEnd) constant[6] = 1;
    acc.add(constant);
    for (const Syzygy& z : syzygy_space_basis(m, k)) acc.add(stacked_jets(g, z, nearEnd, farEnd));
    return acc.rank();
}

} // namespace

EdgeReport separation_profile(const EdgeGluing& g) {
    MuBasis m = mu_basis(g);
    EdgeReport r;
    r.delta = edge_delta(g);
    r.d1 = m.d1;
    r.d2 = m.d2;
    r.separatingBound = std::max(2 * m.d1 - 1, m.d2);
    r.offsetBound = std::max(2 * m.d1 + 3, m.d2 + 4);
    r.completeSeparationBound = r.offsetBound;

    r.joining0 = g.b(Rat(0)) == 0;
    EdgeGluing far = end_swapped(g);
    r.joining1 = far.b(Rat(0)) == 0;

    r.separatingDegree = separating_component_degree(g.a, g.b, g.c, r.separatingBound + 1);

    int o1 = offset_component_degree(g, r.offsetBound + 1);
    int o2 = offset_component_degree(far, r.offsetBound + 1);
    if (o1 < 0 && o2 < 0) fail("InternalError", "no offset syzygy within the degree bound");
    r.offsetDegree = o1 < 0 ? o2 : (o2 < 0 ? o1 : std::min(o1, o2));

    int stable = r.completeSeparationBound + 2;
    int t0 = jet_rank(g, m, stable, true, false);
    int t1 = jet_rank(g, m, stable, false, true);
    if (t0 != (r.joining0 ? 4 : 5) || t1 != (r.joining1 ? 4 : 5))
        fail("InternalError", "stable jet image has unexpected dimension");
    r.completeSeparationDegree = -1;
    for (int k = 1; k <= r.completeSeparationBound; ++k)
        if (jet_rank(g, m, k, true, true) == t0 + t1) {
            r.completeSeparationDegree = k;
            break;
        }
    if (r.completeSeparationDegree < 0)
        fail("InternalError", "complete separation not reached within the bound");
    return r;
}

} // namespace g1
