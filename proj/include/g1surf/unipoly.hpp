#pragma once

#include "g1surf/rat.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace g1 {

// Univariate polynomial over Q, dense coefficients in ascending order.
// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit UniPoly(const Rat& constant) : c_{constant} { trim(); }

    static UniPoly x() { return UniPoly{Rat(0), Rat(1)}; }
    static UniPoly monomial(int d, const Rat& lead = Rat(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    Rat operator()(const Rat& u) const; // Horner
    double eval_double(double u) const;

    UniPoly derivative() const;
    UniPoly antiderivative() const; // constant term 0
    Rat integral01() const;         // definite integral over [0,1]

    UniPoly compose(const UniPoly& inner) const; // p(inner(u))
    UniPoly reflected() const;                   // p(1-u)
    UniPoly shifted(int j) const;                // u^j * p

    // Scale by the rational that makes coefficients coprime integers with the
    // chosen sign on the lowest-order nonzero coefficient; identity on zero.
    UniPoly primitive() const;

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rat> c_;
};

inline UniPoly operator*(const Rat& s, const UniPoly& p) { return p * s; }

UniPoly gcd(const UniPoly& p, const UniPoly& q); // primitive, or zero

// Distinct real roots in the open interval (0,1), by Sturm's theorem.
int count_roots_01(const UniPoly& p);

// p has no zero anywhere on the closed interval [0,1].
bool nonvanishing_on_01(const UniPoly& p);

// num/den < 0 everywhere on [0,1] (both factors nonvanishing, opposite signs).
bool negative_on_01(const UniPoly& num, const UniPoly& den);

// Coefficients of p in the Bernstein basis of degree k (k >= deg p).
std::vector<Rat> bernstein_coeffs(const UniPoly& p, int k);

// Inverse: polynomial with the given degree-k Bernstein coefficients.
UniPoly from_bernstein(const std::vector<Rat>& bb);

Rat binom(int n, int k);

} // namespace g1
