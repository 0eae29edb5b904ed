#include "g1surf/bipoly.hpp"

namespace g1 {

void BiPoly::trim() {
    for (auto& row : rows_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

BiPoly BiPoly::in_u(const UniPoly& p) {
    if (p.is_zero()) return {};
    return BiPoly({p.coeffs()});
}

BiPoly BiPoly::in_v(const UniPoly& p) {
    if (p.is_zero()) return {};
    std::vector<std::vector<Rat>> rows(p.degree() + 1);
    for (int j = 0; j <= p.degree(); ++j) rows[j] = {p.coeff(j)};
    return BiPoly(std::move(rows));
}

int BiPoly::deg_u() const {
    int d = -1;
    for (const auto& row : rows_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (int j = 0; j < static_cast<int>(rows_.size()); ++j)
        if (!rows_[j].empty()) d = std::max(d, j + static_cast<int>(rows_[j].size()) - 1);
    return d;
}

Rat BiPoly::coeff(int i, int j) const {
    if (j < 0 || j >= static_cast<int>(rows_.size())) return Rat(0);
    if (i < 0 || i >= static_cast<int>(rows_[j].size())) return Rat(0);
    return rows_[j][i];
}

BiPoly BiPoly::operator-() const {
    auto rows = rows_;
    for (auto& row : rows)
        for (auto& q : row) q = -q;
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<std::vector<Rat>> rows(std::max(rows_.size(), o.rows_.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto* a = j < rows_.size() ? &rows_[j] : nullptr;
        const auto* b = j < o.rows_.size() ? &o.rows_[j] : nullptr;
        rows[j].assign(std::max(a ? a->size() : 0, b ? b->size() : 0), Rat(0));
        if (a)
            for (std::size_t i = 0; i < a->size(); ++i) rows[j][i] += (*a)[i];
        if (b)
            for (std::size_t i = 0; i < b->size(); ++i) rows[j][i] += (*b)[i];
    }
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::vector<Rat>> rows(rows_.size() + o.rows_.size() - 1);
    std::size_t w = deg_u() + o.deg_u() + 1;
    for (auto& row : rows) row.assign(w, Rat(0));
    for (std::size_t ja = 0; ja < rows_.size(); ++ja)
        for (std::size_t ia = 0; ia < rows_[ja].size(); ++ia) {
            if (rows_[ja][ia] == 0) continue;
            for (std::size_t jb = 0; jb < o.rows_.size(); ++jb)
                for (std::size_t ib = 0; ib < o.rows_[jb].size(); ++ib)
                    rows[ja + jb][ia + ib] += rows_[ja][ia] * o.rows_[jb][ib];
        }
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::operator*(const Rat& s) const {
    auto rows = rows_;
    for (auto& row : rows)
        for (auto& q : row) q = q * s;
    return BiPoly(std::move(rows));
}

Rat BiPoly::operator()(const Rat& u, const Rat& v) const {
    Rat acc(0);
    for (auto jt = rows_.rbegin(); jt != rows_.rend(); ++jt) {
        Rat row(0);
        for (auto it = jt->rbegin(); it != jt->rend(); ++it) row = row * u + *it;
        acc = acc * v + row;
    }
    return acc;
}

double BiPoly::eval_double(double u, double v) const {
    double acc = 0;
    for (auto jt = rows_.rbegin(); jt != rows_.rend(); ++jt) {
        double row = 0;
        for (auto it = jt->rbegin(); it != jt->rend(); ++it) row = row * u + it->get_d();
        acc = acc * v + row;
    }
    return acc;
}

BiPoly BiPoly::d_u() const {
    auto rows = rows_;
    for (auto& row : rows) {
        for (std::size_t i = 1; i < row.size(); ++i) row[i - 1] = row[i] * Rat(static_cast<long>(i));
        if (!row.empty()) row.pop_back();
    }
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::d_v() const {
    if (rows_.size() <= 1) return {};
    std::vector<std::vector<Rat>> rows(rows_.begin() + 1, rows_.end());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (auto& q : rows[j]) q = q * Rat(static_cast<long>(j + 1));
    return BiPoly(std::move(rows));
}

UniPoly BiPoly::at_v0() const {
    return rows_.empty() ? UniPoly() : UniPoly(rows_[0]);
}

UniPoly BiPoly::dv_at_v0() const {
    return rows_.size() < 2 ? UniPoly() : UniPoly(rows_[1]);
}

BiPoly BiPoly::subst(const BiPoly& pu, const BiPoly& pv) const {
    // Horner in v, inner Horner in u.
    BiPoly acc;
    for (auto jt = rows_.rbegin(); jt != rows_.rend(); ++jt) {
        BiPoly row;
        for (auto it = jt->rbegin(); it != jt->rend(); ++it)
            row = row * pu + BiPoly(*it);
        acc = acc * pv + row;
    }
    return acc;
}

} // namespace g1
