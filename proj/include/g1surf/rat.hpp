#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace g1 {

using Int = mpz_class;
using Rat = mpq_class;

// Parse "p" or "p/q" (optional leading minus, no whitespace). Throws
// Error("ParseError") on anything else, including q == 0.
Rat parse_rat(const std::string& s);

// Inverse of parse_rat: canonical form, "p" when the denominator is 1.
std::string rat_str(const Rat& x);

// mpq_class's two-argument constructor does not reduce; this one does.
inline Rat rat(long num, long den = 1) {
    Rat x(num, den);
    x.canonicalize();
    return x;
}

inline int sgn_of(const Rat& x) { return sgn(x); }

inline double to_double(const Rat& x) { return x.get_d(); }

std::vector<Rat> parse_rat_list(const std::vector<std::string>& items);
std::vector<std::string> rat_str_list(const std::vector<Rat>& xs);

} // namespace g1
