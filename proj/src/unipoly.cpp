#include "g1surf/unipoly.hpp"

#include "g1surf/errors.hpp"

#include <utility>

namespace g1 {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(int d, const Rat& lead) {
    std::vector<Rat> c(d + 1, Rat(0));
    c[d] = lead;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return UniPoly(std::move(c));
}

Rat UniPoly::operator()(const Rat& u) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

double UniPoly::eval_double(double u) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + it->get_d();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rat> c(c_.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    return UniPoly(std::move(c));
}

Rat UniPoly::integral01() const {
    Rat acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i) acc += c_[i] / Rat(static_cast<long>(i + 1));
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::reflected() const { return compose(UniPoly{Rat(1), Rat(-1)}); }

UniPoly UniPoly::shifted(int j) const {
    if (is_zero() || j == 0) return *this;
    std::vector<Rat> out(c_.size() + j, Rat(0));
    std::copy(c_.begin(), c_.end(), out.begin() + j);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    Int den_lcm(1), num_gcd(0);
    for (const auto& q : c_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    UniPoly out = *this * scale;
    for (const auto& q : out.c_)
        if (q != 0) {
            if (q < 0) out = -out;
            break;
        }
    return out;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= degree(); ++i) {
        Rat q = coeff(i);
        if (q == 0) continue;
        bool neg = q < 0;
        Rat aq = abs(q);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mag = rat_str(aq);
        if (i == 0)
            s += mag;
        else {
            if (aq != 1) s += mag + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

// Remainder of p modulo q over Q; q must be nonzero.
UniPoly poly_rem(UniPoly p, const UniPoly& q) {
    while (!p.is_zero() && p.degree() >= q.degree()) {
        Rat f = p.leading() / q.leading();
        int shift = p.degree() - q.degree();
        p = p - q * UniPoly::monomial(shift, f);
    }
    return p;
}

// Exact quotient when q divides p.
UniPoly poly_quot(UniPoly p, const UniPoly& q) {
    std::vector<Rat> out(p.degree() >= q.degree() ? p.degree() - q.degree() + 1 : 0, Rat(0));
    while (!p.is_zero() && p.degree() >= q.degree()) {
        Rat f = p.leading() / q.leading();
        int shift = p.degree() - q.degree();
        out[shift] = f;
        p = p - q * UniPoly::monomial(shift, f);
    }
    return UniPoly(std::move(out));
}

int sign_variations(const std::vector<UniPoly>& chain, const Rat& at) {
    int prev = 0, vars = 0;
    for (const auto& p : chain) {
        int s = sgn(p(at));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = poly_rem(chain[chain.size() - 2], chain.back());
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

} // namespace

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive();
}

int count_roots_01(const UniPoly& p) {
    if (p.is_zero()) fail("ParseError", "root count of the zero polynomial");
    UniPoly g = gcd(p, p.derivative());
    UniPoly sf = g.degree() > 0 ? poly_quot(p, g) : p;
    // Strip roots at the endpoints so the half-open Sturm count is the open one.
    while (sf(Rat(0)) == 0) sf = poly_quot(sf, UniPoly::x());
    while (sf(Rat(1)) == 0) sf = poly_quot(sf, UniPoly{Rat(-1), Rat(1)});
    if (sf.degree() < 1) return 0;
    auto chain = sturm_chain(sf);
    return sign_variations(chain, Rat(0)) - sign_variations(chain, Rat(1));
}

bool nonvanishing_on_01(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p(Rat(0)) == 0 || p(Rat(1)) == 0) return false;
    return count_roots_01(p) == 0;
}

bool negative_on_01(const UniPoly& num, const UniPoly& den) {
    if (!nonvanishing_on_01(num) || !nonvanishing_on_01(den)) return false;
    return sgn(num(Rat(0))) * sgn(den(Rat(0))) < 0;
}

Rat binom(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

std::vector<Rat> bernstein_coeffs(const UniPoly& p, int k) {
    if (p.degree() > k)
        fail("DegreeOverflow", "degree " + std::to_string(p.degree()) +
                                   " does not fit Bernstein degree " + std::to_string(k));
    std::vector<Rat> b(k + 1, Rat(0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= std::min(i, p.degree()); ++j)
            b[i] += binom(i, j) / binom(k, j) * p.coeff(j);
    return b;
}

UniPoly from_bernstein(const std::vector<Rat>& bb) {
    int k = static_cast<int>(bb.size()) - 1;
    if (k < 0) return {};
    std::vector<Rat> c(k + 1, Rat(0));
    for (int m = 0; m <= k; ++m)
        for (int i = 0; i <= m; ++i) {
            Rat t = bb[i] * binom(k, i) * binom(k - i, m - i);
            c[m] += ((m - i) % 2 == 0) ? t : -t;
        }
    return UniPoly(std::move(c));
}

} // namespace g1
