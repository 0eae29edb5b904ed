#include "g1surf/linalg.hpp"

#include "g1surf/errors.hpp"

#include <algorithm>
#include <utility>

namespace g1 {

namespace {

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) fail("InternalError", "fraction-free elimination lost exactness");
    return q;
}

// Clear denominators and strip content; keeps the row's sign.
std::vector<Int> integer_row(const QVec& row, const Rat& aug) {
    Int lcm(1);
    for (const auto& q : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), aug.get_den().get_mpz_t());
    std::vector<Int> out(row.size() + 1);
    Int content(0);
    for (std::size_t i = 0; i <= row.size(); ++i) {
        const Rat& q = i < row.size() ? row[i] : aug;
        out[i] = q.get_num() * (lcm / q.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& z : out) z = exact_div(z, content);
    return out;
}

struct Echelon {
    std::vector<std::vector<Int>> m; // rows after forward elimination
    std::vector<std::pair<int, int>> pivots; // (row, col) in elimination order
    int ncols = 0;                           // unknowns (excludes augmented col)
    bool consistent = true;
};

Echelon forward_eliminate(const std::vector<QVec>& rows, const QVec& rhs, int ncols_hint = -1) {
    Echelon e;
    e.ncols = rows.empty() ? std::max(ncols_hint, 0) : static_cast<int>(rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].size()) != e.ncols)
            fail("InternalError", "ragged linear system");
        e.m.push_back(integer_row(rows[r], rhs.empty() ? Rat(0) : rhs[r]));
    }
    int nrows = static_cast<int>(e.m.size());
    auto nnz = [&](int r) {
        int c = 0;
        for (const auto& z : e.m[r])
            if (z != 0) ++c;
        return c;
    };
    Int prev(1);
    int prow = 0;
    for (int col = 0; col < e.ncols && prow < nrows; ++col) {
        int best = -1, bestNnz = 0;
        for (int r = prow; r < nrows; ++r) {
            if (e.m[r][col] == 0) continue;
            int z = nnz(r);
            if (best < 0 || z < bestNnz) best = r, bestNnz = z;
        }
        if (best < 0) continue;
        std::swap(e.m[prow], e.m[best]);
        const Int piv = e.m[prow][col];
        for (int r = prow + 1; r < nrows; ++r) {
            if (e.m[r][col] == 0) {
                // Still rescale by pivot/prev to keep the Bareiss invariant.
                for (auto& z : e.m[r]) z = exact_div(z * piv, prev);
                continue;
            }
            const Int f = e.m[r][col];
            for (int c = 0; c <= e.ncols; ++c)
                e.m[r][c] = exact_div(e.m[r][c] * piv - f * e.m[prow][c], prev);
        }
        e.pivots.emplace_back(prow, col);
        prev = piv;
        ++prow;
    }
    for (int r = prow; r < nrows; ++r)
        if (e.m[r][e.ncols] != 0) e.consistent = false;
    return e;
}

QVec back_substitute(const Echelon& e, const std::vector<std::pair<int, Rat>>& fixedFree) {
    QVec x(e.ncols, Rat(0));
    for (const auto& [col, val] : fixedFree) x[col] = val;
    for (int s = static_cast<int>(e.pivots.size()) - 1; s >= 0; --s) {
        auto [r, pc] = e.pivots[s];
        Rat acc(e.m[r][e.ncols]);
        for (int c = pc + 1; c < e.ncols; ++c)
            if (e.m[r][c] != 0 && x[c] != 0) acc -= Rat(e.m[r][c]) * x[c];
        x[pc] = acc / Rat(e.m[r][pc]);
    }
    return x;
}

} // namespace

SolveResult solve_linear(const std::vector<QVec>& rows, const QVec& rhs, int ncols_hint) {
    if (!rhs.empty() && rhs.size() != rows.size())
        fail("InternalError", "rhs size mismatch");
    Echelon e = forward_eliminate(rows, rhs, ncols_hint);
    SolveResult res;
    res.rank = static_cast<int>(e.pivots.size());
    res.consistent = e.consistent;
    std::vector<bool> isPivot(e.ncols, false);
    for (auto [r, c] : e.pivots) isPivot[c] = true;
    if (res.consistent) res.particular = back_substitute(e, {});
    // Nullspace: one vector per free column (homogeneous system).
    Echelon h = e;
    for (auto& row : h.m) row[h.ncols] = 0;
    for (int f = 0; f < e.ncols; ++f) {
        if (isPivot[f]) continue;
        res.nullspace.push_back(back_substitute(h, {{f, Rat(1)}}));
    }
    return res;
}

int rank_of(const std::vector<QVec>& rows) {
    return static_cast<int>(forward_eliminate(rows, {}).pivots.size());
}

std::vector<QVec> nullspace_of(const std::vector<QVec>& rows) {
    return solve_linear(rows).nullspace;
}

std::vector<QVec> rref(std::vector<QVec> rows) {
    if (rows.empty()) return {};
    const int n = static_cast<int>(rows[0].size());
    int prow = 0;
    for (int col = 0; col < n && prow < static_cast<int>(rows.size()); ++col) {
        int best = -1;
        for (int r = prow; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                best = r;
                break;
            }
        if (best < 0) continue;
        std::swap(rows[prow], rows[best]);
        Rat inv = Rat(1) / rows[prow][col];
        for (auto& q : rows[prow]) q *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == prow || rows[r][col] == 0) continue;
            Rat f = rows[r][col];
            for (int c = 0; c < n; ++c) rows[r][c] -= f * rows[prow][c];
        }
        ++prow;
    }
    rows.resize(prow);
    return rows;
}

bool RankAccumulator::add(QVec v) {
    const int n = static_cast<int>(v.size());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Rat& f = v[pivots_[b]];
        if (f == 0) continue;
        Rat fv = f;
        for (int c = 0; c < n; ++c) v[c] -= fv * basis_[b][c];
    }
    int pivot = -1;
    for (int c = 0; c < n; ++c)
        if (v[c] != 0) {
            pivot = c;
            break;
        }
    if (pivot < 0) return false;
    Rat inv = Rat(1) / v[pivot];
    for (auto& q : v) q *= inv;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Rat f = basis_[b][pivot];
        if (f == 0) continue;
        for (int c = 0; c < n; ++c) basis_[b][c] -= f * v[c];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    basis_.insert(basis_.begin() + idx, std::move(v));
    return true;
}

} // namespace g1
