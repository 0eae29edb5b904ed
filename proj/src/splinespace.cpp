#include "g1surf/splinespace.hpp"

#include "g1surf/errors.hpp"
#include "g1surf/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

namespace g1 {

namespace {

// B^k_t as a coefficient polynomial.
UniPoly bernstein_basis_poly(int k, int t) {
    std::vector<Rat> c(k + 1, Rat(0));
    Rat lead = binom(k, t);
    for (int j = 0; t + j <= k; ++j) {
        Rat term = lead * binom(k - t, j);
        c[t + j] = (j % 2) ? -term : term;
    }
    return UniPoly(std::move(c));
}

// One side of an interior edge in a definite frame.
struct SideRef {
    int face = 0, edge = 0;
    FaceKind kind = FaceKind::Triangle;
    int originEnd = 0;

    bool fromStart() const { return originEnd == 0; }
};

std::pair<SideRef, SideRef> side_refs(const Surface& s, int gi, const EdgeFrame& f) {
    const GluingTopo& g = s.gluings[gi];
    bool firstIsA = (f.face == g.faceA && f.edge == g.edgeA);
    if (!firstIsA && !(f.face == g.faceB && f.edge == g.edgeB))
        fail("MissingGluing", "frame does not name a side of gluing " + std::to_string(gi));
    int f2 = firstIsA ? g.faceB : g.faceA;
    int e2 = firstIsA ? g.edgeB : g.edgeA;
    SideRef r1{f.face, f.edge, s.polygons[f.face].kind, f.originEnd};
    SideRef r2{f2, e2, s.polygons[f2].kind, g.reversed ? 1 - f.originEnd : f.originEnd};
    return {r1, r2};
}

// Frame transversal of a face along one side. The walked row pairing of
// edge_transversal already yields the chart direction rooted at the frame
// origin, at either end.
UniPoly side_frame_transversal(const Spline& sp, const SideRef& r) {
    return edge_transversal(sp.faces[r.face], r.edge, r.fromStart());
}

int inner_len(FaceKind kind, int k) { return kind == FaceKind::Triangle ? k : k + 1; }

// Coefficient values an edge spline induces on the on-row and the two inner
// rows, in the frame's walk order.
struct RowVals {
    std::vector<Rat> on, in1, in2;
};

std::vector<Rat> inner_values(const UniPoly& hside, FaceKind kind, int k,
                              const std::vector<Rat>& on) {
    int L = inner_len(kind, k);
    std::vector<Rat> bb = bernstein_coeffs(hside, L - 1);
    std::vector<Rat> in(L);
    for (int i = 0; i < L; ++i) in[i] = on[i] + bb[i] / k;
    return in;
}

RowVals edge_row_values(const EdgeSpline& e, const SideRef& r1, const SideRef& r2, int k) {
    RowVals rv;
    rv.on = bernstein_coeffs(e.h0, k);
    rv.in1 = inner_values(e.h1, r1.kind, k, rv.on);
    rv.in2 = inner_values(e.h2, r2.kind, k, rv.on);
    return rv;
}

// Accumulates sparse coefficient writes, rejecting disagreeing overlaps
// (jet-incompatible rows meeting at a corner).
struct CoeffWriter {
    std::vector<std::vector<Rat>> vals;
    std::vector<std::vector<bool>> seen;

    CoeffWriter(const Surface& s, int k) {
        for (int f = 0; f < s.nfaces(); ++f) {
            int n = coeff_count(s.polygons[f].kind, k);
            vals.emplace_back(n, Rat(0));
            seen.emplace_back(n, false);
        }
    }
    void set(int face, int ci, const Rat& v) {
        if (seen[face][ci] && vals[face][ci] != v)
            fail("DegreeTooLow", "incompatible coefficient rows meet at a corner");
        vals[face][ci] = v;
        seen[face][ci] = true;
    }
    void write_edge(int k, const SideRef& r1, const SideRef& r2, const RowVals& rv) {
        EdgeRows e1 = edge_rows(r1.kind, k, r1.edge, r1.fromStart());
        EdgeRows e2 = edge_rows(r2.kind, k, r2.edge, r2.fromStart());
        for (int t = 0; t <= k; ++t) {
            set(r1.face, e1.on[t], rv.on[t]);
            set(r2.face, e2.on[t], rv.on[t]);
        }
        for (size_t t = 0; t < e1.inner.size(); ++t) set(r1.face, e1.inner[t], rv.in1[t]);
        for (size_t t = 0; t < e2.inner.size(); ++t) set(r2.face, e2.inner[t], rv.in2[t]);
    }
    void write_side(int k, const SideRef& r, const UniPoly& h0, const UniPoly& hside) {
        EdgeRows er = edge_rows(r.kind, k, r.edge, r.fromStart());
        std::vector<Rat> on = bernstein_coeffs(h0, k);
        std::vector<Rat> in = inner_values(hside, r.kind, k, on);
        for (int t = 0; t <= k; ++t) set(r.face, er.on[t], on[t]);
        for (size_t t = 0; t < er.inner.size(); ++t) set(r.face, er.inner[t], in[t]);
    }
    Spline finish(const Surface& s, int k) {
        Spline sp;
        sp.k = k;
        for (int f = 0; f < s.nfaces(); ++f) {
            BBForm b = BBForm::zero(s.polygons[f].kind, k);
            b.c = std::move(vals[f]);
            sp.faces.push_back(std::move(b));
        }
        return sp;
    }
};

// Basis of the degree-k edge-data space: the constant, then the syzygy basis.
std::vector<EdgeSpline> m1_basis(const EdgeGluing& g, int k) {
    std::vector<EdgeSpline> out;
    out.push_back(EdgeSpline{UniPoly(Rat(1)), UniPoly(), UniPoly()});
    for (const Syzygy& z : syzygy_space_basis(mu_basis(g), k))
        out.push_back(syzygy_to_edge_spline(z, Rat(0)));
    return out;
}

EdgeSpline combine(const std::vector<EdgeSpline>& basis, const QVec& x) {
    EdgeSpline e;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (x[i] == 0) continue;
        e.h0 = e.h0 + basis[i].h0 * x[i];
        e.h1 = e.h1 + basis[i].h1 * x[i];
        e.h2 = e.h2 + basis[i].h2 * x[i];
    }
    return e;
}

// The 12 end-jet coordinates: per end (h0, h0', h1, h1', h2, h2') in the
// end-local charts, near end first.
QVec jet_coords12(const EdgeJets& j) {
    return {j.side1At0.c00, j.side1At0.c10, j.side1At0.c01, j.side1At0.c11,
            j.side2At0.c01, j.side2At0.c11,
            j.side1At1.c00, j.side1At1.c10, j.side1At1.c01, j.side1At1.c11,
            j.side2At1.c01, j.side2At1.c11};
}

std::vector<QVec> jet_rows(const std::vector<EdgeSpline>& basis, const EdgeGluing& g) {
    std::vector<QVec> rows(12, QVec(basis.size(), Rat(0)));
    for (size_t c = 0; c < basis.size(); ++c) {
        QVec jc = jet_coords12(w_jets(basis[c], g));
        for (int r = 0; r < 12; ++r) rows[r][c] = jc[r];
    }
    return rows;
}

void axpy(QVec& y, const Rat& a, const QVec& x) {
    for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Greedy normalization of an affine solution family: zero as many of the
// listed functionals as the family allows, scanning in order. Deterministic;
// `arrays` maps a coordinate vector to its functional values.
template <class F>
QVec greedy_normalize(QVec x0, std::vector<QVec> basis, F&& arrays) {
    if (basis.empty()) return x0;
    QVec fx = arrays(x0);
    std::vector<QVec> fb;
    fb.reserve(basis.size());
    for (const QVec& v : basis) fb.push_back(arrays(v));
    for (size_t t = 0; t < fx.size() && !basis.empty(); ++t) {
        size_t pick = basis.size();
        for (size_t j = 0; j < basis.size(); ++j)
            if (fb[j][t] != 0) {
                pick = j;
                break;
            }
        if (pick == basis.size()) continue;
        QVec bv = std::move(basis[pick]);
        QVec bf = std::move(fb[pick]);
        basis.erase(basis.begin() + pick);
        fb.erase(fb.begin() + pick);
        Rat f = fx[t] / bf[t];
        if (f != 0) {
            axpy(x0, -f, bv);
            axpy(fx, -f, bf);
        }
        for (size_t j = 0; j < basis.size(); ++j) {
            Rat fj = fb[j][t] / bf[t];
            if (fj != 0) {
                axpy(basis[j], -fj, bv);
                axpy(fb[j], -fj, bf);
            }
        }
    }
    return x0;
}

// Functional order for edge normalization: on-row far to near, then the two
// inner rows far to near.
QVec edge_array_vec(const EdgeSpline& e, const SideRef& r1, const SideRef& r2, int k) {
    RowVals rv = edge_row_values(e, r1, r2, k);
    QVec f;
    f.reserve(rv.on.size() + rv.in1.size() + rv.in2.size());
    for (int t = (int)rv.on.size() - 1; t >= 0; --t) f.push_back(rv.on[t]);
    for (int t = (int)rv.in1.size() - 1; t >= 0; --t) f.push_back(rv.in1[t]);
    for (int t = (int)rv.in2.size() - 1; t >= 0; --t) f.push_back(rv.in2[t]);
    return f;
}

// Scales an edge spline so its first nonzero coefficient (h0, then h1, then
// h2, ascending degrees) is 1.
void normalize_leading(EdgeSpline& e) {
    Rat lead(0);
    for (const UniPoly* h : {&e.h0, &e.h1, &e.h2}) {
        for (int i = 0; i <= h->degree() && lead == 0; ++i) lead = h->coeff(i);
        if (lead != 0) break;
    }
    if (lead == 0 || lead == 1) return;
    Rat s = Rat(1) / lead;
    e.h0 = e.h0 * s;
    e.h1 = e.h1 * s;
    e.h2 = e.h2 * s;
}

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) {
        while (p[a] != a) a = p[a] = p[p[a]];
        return a;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// The oracle's linear system: C0 constraints merge on-row coefficients into
// classes (they are pure identifications under the edge homeomorphisms);
// the smoothness identity per edge then contributes one row per coefficient
// of a*W1 - b*U2' - c*W2 over the classes.
struct OracleSystem {
    std::vector<int> off;
    int total = 0;
    std::vector<int> cls;
    int nclasses = 0;
    std::vector<QVec> rows;
};

OracleSystem oracle_system(const Surface& s, const SurfaceData& d, int k) {
    OracleSystem sys;
    sys.off.resize(s.nfaces());
    for (int f = 0; f < s.nfaces(); ++f) {
        sys.off[f] = sys.total;
        sys.total += coeff_count(s.polygons[f].kind, k);
    }
    struct EdgeCtx {
        SideRef r1, r2;
        EdgeRows e1, e2;
    };
    std::vector<EdgeCtx> ctx;
    Dsu dsu(sys.total);
    for (int gi = 0; gi < (int)s.gluings.size(); ++gi) {
        auto [r1, r2] = side_refs(s, gi, canonical_frame(s, gi));
        EdgeCtx c{r1, r2, edge_rows(r1.kind, k, r1.edge, r1.fromStart()),
                  edge_rows(r2.kind, k, r2.edge, r2.fromStart())};
        for (int t = 0; t <= k; ++t)
            dsu.unite(sys.off[r1.face] + c.e1.on[t], sys.off[r2.face] + c.e2.on[t]);
        ctx.push_back(std::move(c));
    }
    std::vector<int> classOf(sys.total, -1);
    for (int i = 0; i < sys.total; ++i) {
        int r = dsu.find(i);
        if (classOf[r] == -1) classOf[r] = sys.nclasses++;
        classOf[i] = classOf[r];
    }
    sys.cls = std::move(classOf);

    for (int gi = 0; gi < (int)s.gluings.size(); ++gi) {
        const EdgeGluing& g = d.edges[gi];
        const EdgeCtx& e = ctx[gi];
        std::map<int, UniPoly> mult;
        auto add = [&](int face, int ci, const UniPoly& p) {
            if (p.is_zero()) return;
            int c = sys.cls[sys.off[face] + ci];
            auto [it, fresh] = mult.emplace(c, p);
            if (!fresh) it->second = it->second + p;
        };
        int L1 = inner_len(e.r1.kind, k), L2 = inner_len(e.r2.kind, k);
        Rat kk(k);
        for (int t = 0; t <= k; ++t) {
            UniPoly dbkt = bernstein_basis_poly(k, t).derivative();
            if (t < L1) add(e.r1.face, e.e1.on[t], g.a * bernstein_basis_poly(L1 - 1, t) * -kk);
            add(e.r2.face, e.e2.on[t], -(g.b * dbkt));
            if (t < L2) add(e.r2.face, e.e2.on[t], g.c * bernstein_basis_poly(L2 - 1, t) * kk);
        }
        for (int t = 0; t < L1; ++t)
            add(e.r1.face, e.e1.inner[t], g.a * bernstein_basis_poly(L1 - 1, t) * kk);
        for (int t = 0; t < L2; ++t)
            add(e.r2.face, e.e2.inner[t], -(g.c * bernstein_basis_poly(L2 - 1, t) * kk));
        int maxdeg = -1;
        for (const auto& [c, p] : mult) maxdeg = std::max(maxdeg, p.degree());
        for (int r = 0; r <= maxdeg; ++r) {
            QVec row(sys.nclasses, Rat(0));
            bool nz = false;
            for (const auto& [c, p] : mult) {
                Rat v = p.coeff(r);
                if (v != 0) {
                    row[c] = v;
                    nz = true;
                }
            }
            if (nz) sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

void check_shape(const Surface& s, const Spline& sp) {
    if ((int)sp.faces.size() != s.nfaces())
        fail("DegreeMismatch", "spline has " + std::to_string(sp.faces.size()) + " faces, surface " +
                                   std::to_string(s.nfaces()));
    for (int f = 0; f < s.nfaces(); ++f) {
        const BBForm& b = sp.faces[f];
        if (b.kind != s.polygons[f].kind || b.k != sp.k ||
            (int)b.c.size() != coeff_count(b.kind, b.k))
            fail("DegreeMismatch", "coefficient block mismatch on face " + std::to_string(f));
    }
}

// --- vertex jet machinery ---

int ray_count(const VertexStar& st) { return st.interior ? st.valency() : st.valency() + 1; }
int ray_of_step(const VertexStar& st, int i) { return st.interior ? i : i + 1; }
int prev_ray(const VertexStar& st, int i) {
    int n = (int)st.steps.size();
    return st.interior ? (i + n - 1) % n : i;
}
int next_ray(const VertexStar& st, int i) {
    int n = (int)st.steps.size();
    return st.interior ? (i + 1) % n : i + 2;
}

// Chart-change relations on (c, p, m): per step the derivative cycle
// relation, plus the mixed relation when the step is joining.
std::vector<QVec> vertex_relation_rows(const VertexStar& star) {
    int nsec = star.valency();
    int nrays = ray_count(star);
    int nvars = 1 + nrays + nsec;
    const int pc = 1, mc = 1 + nrays;
    std::vector<QVec> rows;
    for (int i = 0; i < (int)star.steps.size(); ++i) {
        const VertexStep& st = star.steps[i];
        int e = ray_of_step(star, i), pv = prev_ray(star, i), nx = next_ray(star, i);
        QVec r(nvars, Rat(0));
        r[pc + pv] += 1;
        r[pc + e] -= st.beta0;
        r[pc + nx] -= st.gamma0;
        rows.push_back(std::move(r));
        if (st.joining) {
            int s2 = star.interior ? (i + 1) % nsec : i + 1;
            QVec m(nvars, Rat(0));
            m[mc + i] += 1;
            m[pc + e] -= st.betaPrime0;
            m[pc + nx] -= st.gammaPrime0;
            m[mc + s2] -= st.gamma0;
            rows.push_back(std::move(m));
        }
    }
    return rows;
}

// A maximal run of sectors linked by joining steps (a full cycle when every
// step of an interior star is joining).
struct Group {
    std::vector<int> secs;
    std::vector<int> steps; // chain steps between consecutive sectors
    bool cycle = false;
};

std::vector<Group> sector_groups(const VertexStar& star) {
    int nsec = star.valency();
    int nsteps = (int)star.steps.size();
    auto joins = [&](int i) { return i >= 0 && i < nsteps && star.steps[i].joining; };
    std::vector<Group> out;
    if (star.interior) {
        bool all = nsteps > 0;
        for (int i = 0; i < nsteps; ++i) all = all && star.steps[i].joining;
        if (all) {
            Group g;
            g.cycle = true;
            for (int i = 0; i < nsec; ++i) {
                g.secs.push_back(i);
                if (i + 1 < nsec) g.steps.push_back(i);
            }
            out.push_back(std::move(g));
            return out;
        }
        for (int s0 = 0; s0 < nsec; ++s0) {
            if (joins((s0 + nsec - 1) % nsec)) continue;
            Group g;
            int cur = s0;
            g.secs.push_back(cur);
            while (joins(cur)) {
                g.steps.push_back(cur);
                cur = (cur + 1) % nsec;
                g.secs.push_back(cur);
            }
            out.push_back(std::move(g));
        }
    } else {
        for (int s0 = 0; s0 < nsec; ++s0) {
            if (s0 > 0 && joins(s0 - 1)) continue;
            Group g;
            int cur = s0;
            g.secs.push_back(cur);
            while (joins(cur)) {
                g.steps.push_back(cur);
                ++cur;
                g.secs.push_back(cur);
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

// Mixed values along a group for given ray derivatives: particular solution
// from a seed at the first sector plus the homogeneous chain.
struct Chain {
    std::vector<Rat> part, hom;
};

Chain propagate_mixed(const VertexStar& star, const Group& g, const std::vector<Rat>& p,
                      const Rat& seed) {
    Chain ch;
    ch.part.push_back(seed);
    ch.hom.push_back(Rat(1));
    for (int i : g.steps) {
        const VertexStep& st = star.steps[i];
        Rat next = (ch.part.back() - st.betaPrime0 * p[ray_of_step(star, i)] -
                    st.gammaPrime0 * p[next_ray(star, i)]) /
                   st.gamma0;
        ch.part.push_back(next);
        ch.hom.push_back(ch.hom.back() / st.gamma0);
    }
    return ch;
}

// Closing step of a cycle group: transports the last sector's value back to
// the first. Returns (particular closure, homogeneous closure).
std::pair<Rat, Rat> cycle_closure(const VertexStar& star, const std::vector<Rat>& p,
                                  const Chain& ch) {
    int ci = (int)star.steps.size() - 1;
    const VertexStep& st = star.steps[ci];
    Rat part = (ch.part.back() - st.betaPrime0 * p[ray_of_step(star, ci)] -
                st.gammaPrime0 * p[next_ray(star, ci)]) /
               st.gamma0;
    return {part, ch.hom.back() / st.gamma0};
}

bool fill_p(const VertexStar& star, std::vector<Rat>& p) {
    int n = (int)star.steps.size();
    if (star.interior) {
        if (n < 2) return false;
        for (int i = 0; i + 2 < n; ++i) {
            const VertexStep& st = star.steps[i];
            if (st.gamma0 == 0) return false;
            p[(i + 1) % n] = (p[(i + n - 1) % n] - st.beta0 * p[i]) / st.gamma0;
        }
        for (int i = std::max(0, n - 2); i < n; ++i) {
            const VertexStep& st = star.steps[i];
            if (p[(i + n - 1) % n] != st.beta0 * p[i] + st.gamma0 * p[(i + 1) % n]) return false;
        }
    } else {
        for (int j = 0; j < n; ++j) {
            const VertexStep& st = star.steps[j];
            if (st.gamma0 == 0) return false;
            p[j + 2] = (p[j] - st.beta0 * p[j + 1]) / st.gamma0;
        }
    }
    return true;
}

// Mixed part of a gradient generator: group by group; cycles with a
// non-unit homogeneous closure force the parameter, free chains equalize
// the sectors flanking the dual ray when both lie in the group.
bool fill_gradient_mixed(const VertexStar& star, const std::vector<Group>& groups,
                         VertexJets& jet, int tauRay) {
    int nsec = star.valency();
    int L = -1, R = -1;
    if (star.interior) {
        L = tauRay;
        R = (tauRay + 1) % nsec;
    } else if (tauRay >= 1 && tauRay <= (int)star.steps.size()) {
        L = tauRay - 1;
        R = tauRay;
    }
    for (const Group& g : groups) {
        Chain ch = propagate_mixed(star, g, jet.p, Rat(0));
        Rat t(0);
        bool forced = false;
        if (g.cycle) {
            auto [pc, hc] = cycle_closure(star, jet.p, ch);
            if (hc == 1) {
                if (pc != ch.part.front()) return false;
            } else {
                t = (pc - ch.part.front()) / (Rat(1) - hc);
                forced = true;
            }
        }
        if (!forced && L >= 0) {
            int li = -1, ri = -1;
            for (size_t i = 0; i < g.secs.size(); ++i) {
                if (g.secs[i] == L) li = (int)i;
                if (g.secs[i] == R) ri = (int)i;
            }
            if (li >= 0 && ri >= 0) {
                Rat dh = ch.hom[li] - ch.hom[ri];
                if (dh != 0) t = (ch.part[ri] - ch.part[li]) / dh;
            }
        }
        for (size_t i = 0; i < g.secs.size(); ++i) jet.m[g.secs[i]] = ch.part[i] + t * ch.hom[i];
    }
    return true;
}

QVec pack_jets(const VertexJets& j) {
    QVec v;
    v.reserve(1 + j.p.size() + j.m.size());
    v.push_back(j.c);
    v.insert(v.end(), j.p.begin(), j.p.end());
    v.insert(v.end(), j.m.begin(), j.m.end());
    return v;
}

bool satisfies(const std::vector<QVec>& rows, const QVec& x) {
    for (const QVec& r : rows) {
        Rat dot(0);
        for (size_t i = 0; i < x.size(); ++i) dot += r[i] * x[i];
        if (dot != 0) return false;
    }
    return true;
}

// Jet targets of one side of a vertex-walk step.
struct SideJet {
    Rat v, du, dv, duv;
};

SideJet step_side_target(const VertexStar& star, const VertexJets& gen, int i, int side) {
    int e = ray_of_step(star, i);
    if (side == 1) return {gen.c, gen.p[e], gen.p[prev_ray(star, i)], gen.m[i]};
    int s2 = star.interior ? (i + 1) % star.valency() : i + 1;
    return {gen.c, gen.p[e], gen.p[next_ray(star, i)], gen.m[s2]};
}

// Least-degree edge data realizing the generator's jets along one star edge
// (both incidences at once when the edge loops back to the vertex), with
// thorough vanishing at free ends and the normalization applied.
EdgeSpline solve_star_edge(const Surface& s, const SurfaceData& d, const VertexStar& star,
                           const VertexJets& gen, const std::vector<int>& incid, int k,
                           SideRef& r1out, SideRef& r2out) {
    int i = incid.front();
    const VertexStep& st0 = star.steps[i];
    EdgeGluing g = edge_in_frame(s, d, st0.gluing, st0.frame);
    auto [r1, r2] = side_refs(s, st0.gluing, st0.frame);
    std::vector<EdgeSpline> basis = m1_basis(g, k);
    std::vector<QVec> rows = jet_rows(basis, g);
    SideJet n1 = step_side_target(star, gen, i, 1);
    SideJet n2 = step_side_target(star, gen, i, 2);
    QVec rhs{n1.v,   n1.du,  n1.dv,  n1.duv, n2.dv,  n2.duv,
             Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    if (incid.size() > 1) {
        int j = incid[1];
        int nv = nverts(r1.kind);
        int farVert = st0.frame.originEnd == 0 ? (st0.frame.edge + 1) % nv : st0.frame.edge;
        bool jSide1 = (star.steps[j].corner == Slot{r1.face, farVert});
        SideJet f1 = step_side_target(star, gen, j, jSide1 ? 1 : 2);
        SideJet f2 = step_side_target(star, gen, j, jSide1 ? 2 : 1);
        rhs[6] = f1.v;
        rhs[7] = f1.du;
        rhs[8] = f1.dv;
        rhs[9] = f1.duv;
        rhs[10] = f2.dv;
        rhs[11] = f2.duv;
    }
    SolveResult sol = solve_linear(rows, rhs, (int)basis.size());
    if (!sol.consistent)
        fail("DegreeTooLow", "vertex jets have no realization along an edge at degree " +
                                 std::to_string(k));
    QVec x = greedy_normalize(sol.particular, sol.nullspace, [&](const QVec& v) {
        return edge_array_vec(combine(basis, v), r1, r2, k);
    });
    r1out = r1;
    r2out = r2;
    return combine(basis, x);
}

// Linear rows of the boundary-edge jet conditions on the monomial
// coefficients of (h0, h1); `sh` is the face's reversal shear.
std::vector<QVec> boundary_jet_rows(int k, int tw, int sh) {
    int n0 = k + 1, n1 = k + tw;
    int nc = n0 + n1;
    auto row = [&]() { return QVec(nc, Rat(0)); };
    std::vector<QVec> rows;
    {
        QVec r = row();
        r[0] = 1;
        rows.push_back(std::move(r)); // h0(0)
    }
    {
        QVec r = row();
        if (n0 > 1) r[1] = 1;
        rows.push_back(std::move(r)); // h0'(0)
    }
    {
        QVec r = row();
        r[n0] = 1;
        rows.push_back(std::move(r)); // h1(0)
    }
    {
        QVec r = row();
        if (n1 > 1) r[n0 + 1] = 1;
        rows.push_back(std::move(r)); // h1'(0)
    }
    {
        QVec r = row();
        for (int i = 0; i < n0; ++i) r[i] = 1;
        rows.push_back(std::move(r)); // h0(1)
    }
    {
        QVec r = row();
        for (int i = 1; i < n0; ++i) r[i] = i;
        rows.push_back(std::move(r)); // h0'(1)
    }
    {
        QVec r = row();
        for (int j = 0; j < n1; ++j) r[n0 + j] = 1;
        for (int i = 1; i < n0; ++i) r[i] = Rat(-sh * i);
        rows.push_back(std::move(r)); // h1(1) - sh h0'(1)
    }
    {
        QVec r = row();
        for (int i = 2; i < n0; ++i) r[i] = Rat(sh * i * (i - 1));
        for (int j = 1; j < n1; ++j) r[n0 + j] = Rat(-j);
        rows.push_back(std::move(r)); // sh h0''(1) - h1'(1)
    }
    return rows;
}

std::pair<UniPoly, UniPoly> split_pair(const QVec& x, int n0) {
    std::vector<Rat> c0(x.begin(), x.begin() + n0);
    std::vector<Rat> c1(x.begin() + n0, x.end());
    return {UniPoly(std::move(c0)), UniPoly(std::move(c1))};
}

QVec side_array_vec(const UniPoly& h0, const UniPoly& h1, const SideRef& r, int k) {
    std::vector<Rat> on = bernstein_coeffs(h0, k);
    std::vector<Rat> in = inner_values(h1, r.kind, k, on);
    QVec f;
    f.reserve(on.size() + in.size());
    for (int t = (int)on.size() - 1; t >= 0; --t) f.push_back(on[t]);
    for (int t = (int)in.size() - 1; t >= 0; --t) f.push_back(in[t]);
    return f;
}

// One boundary ray of a boundary vertex star.
struct BoundaryRay {
    int face = 0, edge = 0, vert = 0;
    int rayIdx = 0, otherRay = 0, sector = 0;
};

std::vector<BoundaryRay> boundary_rays(const Surface& s, const VertexStar& star) {
    std::vector<BoundaryRay> out;
    if (star.interior) return out;
    int n = star.valency();
    const Slot& c0 = star.corners.front();
    int nv0 = s.nverts_of(c0.face);
    int arr0 = (c0.vert + nv0 - 1) % nv0;
    int entry = s.gluingAt[c0.face][arr0] == -1 ? arr0 : c0.vert;
    out.push_back({c0.face, entry, c0.vert, 0, 1, 0});
    const Slot& cb = star.corners.back();
    int nvb = s.nverts_of(cb.face);
    int arrb = (cb.vert + nvb - 1) % nvb;
    int exit = s.gluingAt[cb.face][cb.vert] == -1 ? cb.vert : arrb;
    out.push_back({cb.face, exit, cb.vert, n, n - 1, n - 1});
    return out;
}

std::pair<UniPoly, UniPoly> solve_boundary_ray(const VertexJets& gen, const BoundaryRay& ray,
                                               const SideRef& ref, int k) {
    int tw = twist_r(ref.kind);
    int n0 = k + 1;
    std::vector<QVec> rows = boundary_jet_rows(k, tw, shear_r(ref.kind));
    QVec rhs{gen.c,  gen.p[ray.rayIdx], gen.p[ray.otherRay], gen.m[ray.sector],
             Rat(0), Rat(0),            Rat(0),              Rat(0)};
    SolveResult sol = solve_linear(rows, rhs, n0 + k + tw);
    if (!sol.consistent)
        fail("DegreeTooLow", "vertex jets have no realization along a boundary edge at degree " +
                                 std::to_string(k));
    QVec x = greedy_normalize(sol.particular, sol.nullspace, [&](const QVec& v) {
        auto [h0, h1] = split_pair(v, n0);
        return side_array_vec(h0, h1, ref, k);
    });
    return split_pair(x, n0);
}

std::tuple<BasisClass, int, int> classify_supplement(const Surface& s, const Spline& sp) {
    for (int v = 0; v < s.orbit_count(); ++v)
        for (const Slot& sl : s.orbitSlots[v])
            if (!corner_jet(sp.faces[sl.face], sl.vert).is_zero())
                return {BasisClass::Vertex, v, -1};
    for (int gi = 0; gi < (int)s.gluings.size(); ++gi) {
        EdgeSpline e = spline_edge_data(s, sp, gi);
        if (!e.h0.is_zero() || !e.h1.is_zero() || !e.h2.is_zero())
            return {BasisClass::InteriorEdge, gi, -1};
    }
    for (const auto& [f, ed] : s.boundaryEdges)
        if (!edge_restriction(sp.faces[f], ed, true).is_zero() ||
            !edge_transversal(sp.faces[f], ed, true).is_zero())
            return {BasisClass::BoundaryEdge, f, ed};
    for (int f = 0; f < s.nfaces(); ++f)
        for (const Rat& c : sp.faces[f].c)
            if (c != 0) return {BasisClass::Face, f, -1};
    return {BasisClass::Face, 0, -1};
}

} // namespace

// --- edge data ---

std::optional<std::string> edge_spline_defect(const EdgeSpline& e, const EdgeGluing& g, int k) {
    UniPoly res = g.a * e.h1 - g.b * e.h0.derivative() - g.c * e.h2;
    if (!res.is_zero()) return "transversal identity a h1 - b h0' - c h2 is nonzero";
    if (e.h0.degree() > k) return "h0 exceeds degree " + std::to_string(k);
    if (e.h1.degree() > k - 1 + twist_r(g.kind1)) return "h1 exceeds its side's degree cap";
    if (e.h2.degree() > k - 1 + twist_r(g.kind2)) return "h2 exceeds its side's degree cap";
    return std::nullopt;
}

int edge_space_dim(const EdgeGluing& g, int k) {
    if (k < 0) return 0;
    return syzygy_space_dim(mu_basis(g), k) + 1;
}

EdgeSpline syzygy_to_edge_spline(const Syzygy& z, const Rat& c0) {
    return {z.B.antiderivative() + UniPoly(c0), -z.A, z.C};
}

Syzygy edge_spline_to_syzygy(const EdgeSpline& e) { return {-e.h1, e.h0.derivative(), e.h2}; }

// --- jets ---

EdgeJets w_jets(const EdgeSpline& e, const EdgeGluing& g) {
    UniPoly h0p = e.h0.derivative();
    UniPoly h0pp = h0p.derivative();
    UniPoly h1p = e.h1.derivative();
    UniPoly h2p = e.h2.derivative();
    Rat z(0), o(1);
    Rat s1(g.shear1()), s2(g.shear2());
    EdgeJets j;
    j.side1At0 = {e.h0(z), h0p(z), e.h1(z), h1p(z)};
    j.side2At0 = {e.h0(z), h0p(z), e.h2(z), h2p(z)};
    j.side1At1 = {e.h0(o), -h0p(o), e.h1(o) - s1 * h0p(o), s1 * h0pp(o) - h1p(o)};
    j.side2At1 = {e.h0(o), -h0p(o), e.h2(o) - s2 * h0p(o), s2 * h0pp(o) - h2p(o)};
    return j;
}

int im_w_dim(const EdgeGluing& g, int end) {
    const EdgeGluing ge = (end == 0) ? g : end_swapped(g);
    return ge.b(Rat(0)) == 0 ? 4 : 5;
}

int w_rank_at(const EdgeGluing& g, int end, int k) {
    RankAccumulator acc;
    int base = (end == 0) ? 0 : 6;
    for (const EdgeSpline& e : m1_basis(g, k)) {
        QVec jc = jet_coords12(w_jets(e, g));
        acc.add(QVec(jc.begin() + base, jc.begin() + base + 6));
    }
    return acc.rank();
}

int w_rank(const EdgeGluing& g, int k) {
    RankAccumulator acc;
    for (const EdgeSpline& e : m1_basis(g, k)) acc.add(jet_coords12(w_jets(e, g)));
    return acc.rank();
}

// --- vertex jet spaces ---

int vertex_freedom_dim(const VertexStar& star) {
    int nvars = 1 + ray_count(star) + star.valency();
    return nvars - rank_of(vertex_relation_rows(star));
}

int vertex_freedom_dim(const Surface& s, const SurfaceData& d, int orbit) {
    return vertex_freedom_dim(vertex_star(s, d, orbit));
}

std::vector<VertexJets> vertex_jet_generators(const VertexStar& star) {
    int nsec = star.valency();
    int nrays = ray_count(star);
    int nvars = 1 + nrays + nsec;
    std::vector<QVec> rows = vertex_relation_rows(star);
    int dim = nvars - rank_of(rows);

    std::vector<VertexJets> out;
    VertexJets value;
    value.c = 1;
    value.p.assign(nrays, Rat(0));
    value.m.assign(nsec, Rat(0));
    out.push_back(value);

    std::vector<Group> groups = sector_groups(star);
    bool ok = true;
    int exitRay = star.interior ? 0 : 1;
    int entryRay = star.interior ? nsec - 1 : 0;
    for (int tau : {exitRay, entryRay}) {
        VertexJets grad;
        grad.c = 0;
        grad.p.assign(nrays, Rat(0));
        grad.m.assign(nsec, Rat(0));
        grad.p[tau] = 1;
        ok = ok && fill_p(star, grad.p) && fill_gradient_mixed(star, groups, grad, tau);
        out.push_back(std::move(grad));
    }
    if (ok) {
        std::vector<Rat> zp(nrays, Rat(0));
        for (const Group& g : groups) {
            if (g.cycle) {
                Chain probe = propagate_mixed(star, g, zp, Rat(1));
                auto [pc, hc] = cycle_closure(star, zp, probe);
                (void)pc;
                if (hc != 1) continue; // forced chain, no free mixed direction
            }
            VertexJets mj;
            mj.c = 0;
            mj.p.assign(nrays, Rat(0));
            mj.m.assign(nsec, Rat(0));
            Chain ch = propagate_mixed(star, g, mj.p, Rat(1));
            for (size_t i = 0; i < g.secs.size(); ++i) mj.m[g.secs[i]] = ch.part[i];
            out.push_back(std::move(mj));
        }
    }
    if (ok && (int)out.size() == dim) {
        bool ver = true;
        for (const VertexJets& j : out) ver = ver && satisfies(rows, pack_jets(j));
        if (ver) return out;
    }
    // Degenerate star (e.g. a gradient with no compatible mixed part):
    // return an unnormalized kernel basis instead.
    out.clear();
    SolveResult sr = solve_linear(rows, {}, nvars);
    for (const QVec& v : sr.nullspace) {
        VertexJets j;
        j.c = v[0];
        j.p.assign(v.begin() + 1, v.begin() + 1 + nrays);
        j.m.assign(v.begin() + 1 + nrays, v.end());
        out.push_back(std::move(j));
    }
    return out;
}

// --- splines ---

Spline zero_spline(const Surface& s, int k) {
    Spline sp;
    sp.k = k;
    for (int f = 0; f < s.nfaces(); ++f) sp.faces.push_back(BBForm::zero(s.polygons[f].kind, k));
    return sp;
}

EdgeSpline spline_edge_data(const Surface& s, const Spline& sp, int gi) {
    return spline_edge_data(s, sp, gi, canonical_frame(s, gi));
}

EdgeSpline spline_edge_data(const Surface& s, const Spline& sp, int gi, const EdgeFrame& f) {
    auto [r1, r2] = side_refs(s, gi, f);
    return {edge_restriction(sp.faces[r1.face], r1.edge, r1.fromStart()),
            side_frame_transversal(sp, r1), side_frame_transversal(sp, r2)};
}

std::pair<Jet11, Jet11> step_jets(const Surface& s, const Spline& sp, const VertexStep& st) {
    Jet a = corner_jet(sp.faces[st.frame.face], st.corner.vert);
    if (st.frame.edge != st.corner.vert) std::swap(a.c10, a.c01);
    const GluingTopo& g = s.gluings[st.gluing];
    int e2 = (g.faceA == st.frame.face && g.edgeA == st.frame.edge) ? g.edgeB : g.edgeA;
    Slot other = s.edge_end_slot(st.frame.face, st.frame.edge, st.frame.originEnd);
    Jet b = corner_jet(sp.faces[other.face], other.vert);
    if (e2 != other.vert) std::swap(b.c10, b.c01);
    return {a, b};
}

VerifyReport verify_spline(const Surface& s, const SurfaceData& d, const Spline& sp) {
    check_shape(s, sp);
    VerifyReport rep;
    for (int gi = 0; gi < (int)s.gluings.size(); ++gi) {
        auto [r1, r2] = side_refs(s, gi, canonical_frame(s, gi));
        const EdgeGluing& g = d.edges[gi];
        UniPoly u1 = edge_restriction(sp.faces[r1.face], r1.edge, r1.fromStart());
        UniPoly u2 = edge_restriction(sp.faces[r2.face], r2.edge, r2.fromStart());
        EdgeResidual res;
        res.gluing = gi;
        res.c0 = u1 - u2;
        res.g1 = g.a * side_frame_transversal(sp, r1) - g.b * u2.derivative() -
                 g.c * side_frame_transversal(sp, r2);
        rep.ok = rep.ok && res.ok();
        rep.edges.push_back(std::move(res));
    }
    return rep;
}

// --- dimension ---

namespace {
long long rat_to_ll(const Rat& x, const char* what) {
    if (x.get_den() != 1) fail("HalfIntegerResult", std::string(what) + " is not an integer");
    return x.get_num().get_si();
}
} // namespace

DimensionResult dimension_formula(const Surface& s, const SurfaceData& d, int k) {
    int n0 = s.orbit_count();
    int nb = (int)s.boundaryEdges.size();
    int nrect = 0, ntri = 0;
    for (const Polygon& p : s.polygons) ((p.kind == FaceKind::Rectangle) ? nrect : ntri)++;
    long long delta = 0;
    int exact = 4, bound = 4;
    for (const EdgeGluing& g : d.edges) {
        delta += edge_delta(g);
        EdgeReport er = separation_profile(g);
        exact = std::max(exact, er.completeSeparationDegree);
        bound = std::max(bound, er.completeSeparationBound);
    }
    int nplus = 0;
    for (int v = 0; v < n0; ++v) {
        if (s.orbitOnBoundary[v]) continue;
        VertexStar star = vertex_star(s, d, v);
        if (star.valency() != 4) continue;
        bool all = true;
        for (const VertexStep& st : star.steps) all = all && st.joining;
        if (all) ++nplus;
    }
    Rat kk(k);
    Rat val = Rat(3 * n0 + nplus) - rat(delta) + (kk - Rat(5, 2)) * nb +
              (kk * kk - 2 * kk - 1) * nrect + (kk * kk - 3 * kk - 1) / 2 * ntri;
    DimensionResult r;
    r.value = rat_to_ll(val, "dimension count");
    r.exactThreshold = exact;
    r.boundThreshold = bound;
    r.valid = k >= exact;
    TopologyReport t = topology(s);
    if (t.orientable && t.genus) {
        long long g2 = *t.genus;
        long long kk2 = k;
        r.genusForm = 6 - 6 * g2 + nplus - delta - 3 * t.boundaryComponents +
                      (kk2 - 1) * nb + (kk2 * kk2 - 2 * kk2 + 2) * nrect +
                      (kk2 - 1) * (kk2 - 2) / 2 * ntri;
    }
    return r;
}

int dimension_oracle(const Surface& s, const SurfaceData& d, int k) {
    OracleSystem sys = oracle_system(s, d, k);
    return sys.nclasses - rank_of(sys.rows);
}

std::vector<Spline> oracle_kernel(const Surface& s, const SurfaceData& d, int k) {
    OracleSystem sys = oracle_system(s, d, k);
    std::vector<QVec> ker;
    if (sys.rows.empty()) {
        for (int i = 0; i < sys.nclasses; ++i) {
            QVec v(sys.nclasses, Rat(0));
            v[i] = 1;
            ker.push_back(std::move(v));
        }
    } else {
        ker = nullspace_of(sys.rows);
    }
    std::vector<Spline> out;
    for (const QVec& v : ker) {
        Spline sp = zero_spline(s, k);
        for (int f = 0; f < s.nfaces(); ++f) {
            int n = (int)sp.faces[f].c.size();
            for (int i = 0; i < n; ++i) sp.faces[f].c[i] = v[sys.cls[sys.off[f] + i]];
        }
        out.push_back(std::move(sp));
    }
    return out;
}

// --- basis classes ---

std::vector<Spline> vertex_basis_splines(const Surface& s, const SurfaceData& d, int orbit,
                                         int k) {
    if (k < 2) fail("DegreeTooLow", "vertex basis splines need degree >= 2");
    VertexStar star = vertex_star(s, d, orbit);
    std::vector<VertexJets> gens = vertex_jet_generators(star);

    // distinct star edges with their step incidences, in walk order
    std::vector<std::pair<int, std::vector<int>>> edges;
    for (int i = 0; i < (int)star.steps.size(); ++i) {
        auto it = std::find_if(edges.begin(), edges.end(),
                               [&](const auto& pr) { return pr.first == star.steps[i].gluing; });
        if (it == edges.end())
            edges.push_back({star.steps[i].gluing, {i}});
        else
            it->second.push_back(i);
    }
    std::vector<BoundaryRay> rays = boundary_rays(s, star);

    std::vector<Spline> out;
    for (const VertexJets& gen : gens) {
        CoeffWriter w(s, k);
        for (const auto& [gi, inc] : edges) {
            SideRef r1, r2;
            EdgeSpline e = solve_star_edge(s, d, star, gen, inc, k, r1, r2);
            w.write_edge(k, r1, r2, edge_row_values(e, r1, r2, k));
        }
        for (const BoundaryRay& ray : rays) {
            SideRef ref{ray.face, ray.edge, s.polygons[ray.face].kind,
                        ray.edge == ray.vert ? 0 : 1};
            auto [h0, h1] = solve_boundary_ray(gen, ray, ref, k);
            w.write_side(k, ref, h0, h1);
        }
        out.push_back(w.finish(s, k));
    }
    return out;
}

std::vector<Spline> edge_basis_splines(const Surface& s, const SurfaceData& d, int gi, int k) {
    const EdgeGluing& g = d.edges[gi];
    auto [r1, r2] = side_refs(s, gi, canonical_frame(s, gi));
    std::vector<EdgeSpline> basis = m1_basis(g, k);
    std::vector<Spline> out;
    for (const QVec& v : nullspace_of(jet_rows(basis, g))) {
        EdgeSpline e = combine(basis, v);
        normalize_leading(e);
        CoeffWriter w(s, k);
        w.write_edge(k, r1, r2, edge_row_values(e, r1, r2, k));
        out.push_back(w.finish(s, k));
    }
    return out;
}

std::vector<Spline> boundary_edge_basis_splines(const Surface& s, int face, int edge, int k) {
    if (s.gluingAt[face][edge] != -1)
        fail("MissingGluing", "boundary basis splines need an unglued edge");
    FaceKind kind = s.polygons[face].kind;
    int tw = twist_r(kind);
    SideRef ref{face, edge, kind, 0};
    std::vector<Spline> out;
    for (const QVec& v : nullspace_of(boundary_jet_rows(k, tw, shear_r(kind)))) {
        auto [h0, h1] = split_pair(v, k + 1);
        // scale the first nonzero coefficient (h0 then h1, ascending) to 1
        Rat lead(0);
        for (const UniPoly* h : {&h0, &h1}) {
            for (int i = 0; i <= h->degree() && lead == 0; ++i) lead = h->coeff(i);
            if (lead != 0) break;
        }
        if (lead != 0 && lead != 1) {
            h0 = h0 * (Rat(1) / lead);
            h1 = h1 * (Rat(1) / lead);
        }
        CoeffWriter w(s, k);
        w.write_side(k, ref, h0, h1);
        out.push_back(w.finish(s, k));
    }
    return out;
}

std::vector<Spline> face_basis_splines(const Surface& s, int face, int k) {
    FaceKind kind = s.polygons[face].kind;
    std::vector<Spline> out;
    auto push = [&](int i, int j) {
        Spline sp = zero_spline(s, k);
        sp.faces[face].at(i, j) = 1;
        out.push_back(std::move(sp));
    };
    if (kind == FaceKind::Rectangle) {
        for (int j = 2; j <= k - 2; ++j)
            for (int i = 2; i <= k - 2; ++i) push(i, j);
    } else {
        for (int j = 2; j <= k - 4; ++j)
            for (int i = 2; i + j <= k - 2; ++i) push(i, j);
    }
    return out;
}

int BasisCatalog::count(BasisClass c) const {
    return (int)std::count_if(members.begin(), members.end(),
                              [&](const BasisMember& m) { return m.cls == c; });
}

BasisCatalog assemble_basis(const Surface& s, const SurfaceData& d, int k) {
    BasisCatalog cat;
    cat.k = k;
    RankAccumulator acc;
    auto coords = [](const Spline& sp) {
        QVec v;
        for (const BBForm& f : sp.faces) v.insert(v.end(), f.c.begin(), f.c.end());
        return v;
    };
    auto add = [&](Spline sp, BasisClass cls, int anchor, int anchorEdge, bool supp) {
        if (!acc.add(coords(sp))) return false;
        cat.members.push_back({std::move(sp), cls, anchor, anchorEdge, supp});
        return true;
    };
    for (int v = 0; v < s.orbit_count(); ++v) {
        try {
            for (Spline& sp : vertex_basis_splines(s, d, v, k))
                add(std::move(sp), BasisClass::Vertex, v, -1, false);
        } catch (const Error& e) {
            if (e.code() != std::string("DegreeTooLow")) throw;
            cat.skippedVertices.push_back(v);
        }
    }
    for (int gi = 0; gi < (int)s.gluings.size(); ++gi)
        for (Spline& sp : edge_basis_splines(s, d, gi, k))
            add(std::move(sp), BasisClass::InteriorEdge, gi, -1, false);
    for (const auto& [f, e] : s.boundaryEdges)
        for (Spline& sp : boundary_edge_basis_splines(s, f, e, k))
            add(std::move(sp), BasisClass::BoundaryEdge, f, e, false);
    for (int f = 0; f < s.nfaces(); ++f)
        for (Spline& sp : face_basis_splines(s, f, k))
            add(std::move(sp), BasisClass::Face, f, -1, false);

    cat.oracleDim = dimension_oracle(s, d, k);
    if (acc.rank() < cat.oracleDim)
        for (Spline& sp : oracle_kernel(s, d, k)) {
            if (acc.rank() >= cat.oracleDim) break;
            auto [cls, anchor, anchorEdge] = classify_supplement(s, sp);
            add(std::move(sp), cls, anchor, anchorEdge, true);
        }
    if (acc.rank() != cat.oracleDim)
        fail("ValidationFailed", "basis assembly did not reach the oracle dimension");
    cat.constructive = cat.skippedVertices.empty();
    for (const BasisMember& m : cat.members) cat.constructive = cat.constructive && !m.supplemented;
    for (int gi = 0; gi < (int)s.gluings.size(); ++gi) {
        const EdgeGluing& g = d.edges[gi];
        int deficit = im_w_dim(g, 0) + im_w_dim(g, 1) - w_rank(g, k);
        if (deficit != 0) cat.edgeDeficits.push_back({gi, deficit});
    }
    return cat;
}

// --- realization ---

RealizedMesh realize(const Surface& s, const Spline& x, const Spline& y, const Spline& z,
                     int samplesPerEdge) {
    check_shape(s, x);
    check_shape(s, y);
    check_shape(s, z);
    if (y.k != x.k || z.k != x.k)
        fail("DegreeMismatch", "coordinate splines have different degrees");
    if (samplesPerEdge < 1) fail("ParseError", "samples per edge must be at least 1");
    int n = samplesPerEdge;
    RealizedMesh m;
    for (int f = 0; f < s.nfaces(); ++f) {
        BiPoly bx = from_bb(x.faces[f]);
        BiPoly by = from_bb(y.faces[f]);
        BiPoly bz = from_bb(z.faces[f]);
        int base = (int)m.positions.size();
        int fbegin = (int)m.faces.size();
        auto emit = [&](double u, double v) {
            m.positions.push_back({bx.eval_double(u, v), by.eval_double(u, v), bz.eval_double(u, v)});
        };
        if (s.polygons[f].kind == FaceKind::Triangle) {
            std::vector<int> rowStart(n + 1);
            for (int j = 0, acc2 = 0; j <= n; ++j) {
                rowStart[j] = base + acc2;
                acc2 += n - j + 1;
            }
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i + j <= n; ++i) emit((double)i / n, (double)j / n);
            auto idx = [&](int i, int j) { return rowStart[j] + i; };
            for (int j = 0; j < n; ++j)
                for (int i = 0; i + j < n; ++i) {
                    m.faces.push_back({idx(i, j), idx(i + 1, j), idx(i, j + 1)});
                    if (i + j < n - 1)
                        m.faces.push_back({idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)});
                }
        } else {
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n; ++i) emit((double)i / n, (double)j / n);
            auto idx = [&](int i, int j) { return base + j * (n + 1) + i; };
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i)
                    m.faces.push_back({idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1)});
        }
        m.patchFaceRanges.push_back({fbegin, (int)m.faces.size()});
    }
    return m;
}

} // namespace g1
