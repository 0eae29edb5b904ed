#pragma once

#include "g1surf/unipoly.hpp"

#include <vector>

namespace g1 {

// Bivariate polynomial over Q. Coefficient c(i,j) multiplies u^i v^j; rows are
// indexed by j. The zero polynomial has no rows.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) { trim(); }
    explicit BiPoly(const Rat& constant) : rows_{{constant}} { trim(); }

    static BiPoly in_u(const UniPoly& p);
    static BiPoly in_v(const UniPoly& p);
    static BiPoly u() { return in_u(UniPoly::x()); }
    static BiPoly v() { return in_v(UniPoly::x()); }

    bool is_zero() const { return rows_.empty(); }
    int deg_u() const;
    int deg_v() const { return static_cast<int>(rows_.size()) - 1; }
    int total_degree() const;
    Rat coeff(int i, int j) const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& s) const;
    bool operator==(const BiPoly& o) const { return rows_ == o.rows_; }

    Rat operator()(const Rat& u, const Rat& v) const;
    double eval_double(double u, double v) const;

    BiPoly d_u() const;
    BiPoly d_v() const;

    UniPoly at_v0() const;   // g(u, 0)
    UniPoly dv_at_v0() const; // (d/dv g)(u, 0)

    // Substitute u -> pu(u,v), v -> pv(u,v).
    BiPoly subst(const BiPoly& pu, const BiPoly& pv) const;

private:
    void trim();
    std::vector<std::vector<Rat>> rows_; // rows_[j][i]
};

inline BiPoly operator*(const Rat& s, const BiPoly& p) { return p * s; }

} // namespace g1
