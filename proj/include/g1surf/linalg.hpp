#pragma once

#include "g1surf/rat.hpp"

#include <vector>

namespace g1 {

using QVec = std::vector<Rat>;

struct SolveResult {
    bool consistent = true;
    QVec particular;             // free variables set to 0; empty when inconsistent
    std::vector<QVec> nullspace; // one basis vector per free column
    int rank = 0;
};

// Exact dense solve of rows * x = rhs over Q (fraction-free integer
// elimination inside). Empty rhs means homogeneous. Column order is
// significant: free columns and canonical bases follow it. ncols_hint is only
// needed when rows may be empty.
SolveResult solve_linear(const std::vector<QVec>& rows, const QVec& rhs = {},
                         int ncols_hint = -1);

int rank_of(const std::vector<QVec>& rows);
std::vector<QVec> nullspace_of(const std::vector<QVec>& rows);

// Reduced row echelon form; returns the nonzero rows, pivots scaled to 1,
// ordered by pivot column.
std::vector<QVec> rref(std::vector<QVec> rows);

// Maintains an RREF basis of the span of added vectors.
class RankAccumulator {
public:
    // True when v enlarged the span (v was independent).
    bool add(QVec v);
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<QVec>& basis() const { return basis_; }

private:
    std::vector<QVec> basis_;
    std::vector<int> pivots_;
};

} // namespace g1
